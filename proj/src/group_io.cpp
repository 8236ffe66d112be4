#include "cd1lab/group_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cd1lab {

static std::string strip(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

static parse_error parse_fail(const std::string& name, int lineno,
                              const std::string& what) {
  std::ostringstream os;
  os << name << ":" << lineno << ": " << what;
  return parse_error(os.str());
}

Group parse_group_stream(std::istream& in, const std::string& name,
                         uint64_t element_cap) {
  std::string line;
  int lineno = 0;
  long degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    if (degree < 0) {
      std::istringstream is(s);
      std::string kw;
      is >> kw;
      if (kw != "degree")
        throw parse_fail(name, lineno, "expected 'degree <d>' header");
      long d = 0;
      if (!(is >> d) || d <= 0)
        throw parse_fail(name, lineno, "degree must be a positive integer");
      std::string extra;
      if (is >> extra)
        throw parse_fail(name, lineno, "unexpected text after degree");
      degree = d;
      continue;
    }
    try {
      gens.push_back(parse_perm(s, static_cast<uint32_t>(degree)));
    } catch (const std::invalid_argument& e) {
      throw parse_fail(name, lineno, e.what());
    }
  }
  if (degree < 0) throw parse_fail(name, lineno, "missing 'degree <d>' header");
  if (gens.empty())
    throw parse_fail(name, lineno, "no generators (need at least one line)");
  return Group::from_generators(static_cast<uint32_t>(degree), std::move(gens),
                                element_cap);
}

Group load_group_file(const std::string& path, uint64_t element_cap) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open group file: " + path);
  return parse_group_stream(in, path, element_cap);
}

void write_group_file(const std::string& path, const Group& g,
                      const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write group file: " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "degree " << g.degree() << "\n";
  for (const Perm& p : g.generators()) out << p.cycle_string() << "\n";
  if (!out) throw parse_error("write failed: " + path);
}

}  // namespace cd1lab
