#include "cd1lab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "cd1lab/kernels.hpp"

namespace cd1lab {

Perm::Perm(uint32_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Perm::Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<uint32_t> out(img_.size());
  kern::active().compose_u32(out.data(), img_.data(), rhs.img_.data(),
                             img_.size());
  Perm p(0);
  p.img_ = std::move(out);
  return p;
}

Perm Perm::inverse() const {
  std::vector<uint32_t> out(img_.size());
  for (uint32_t i = 0; i < img_.size(); ++i) out[img_[i]] = i;
  Perm p(0);
  p.img_ = std::move(out);
  return p;
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<uint32_t>> Perm::cycles() const {
  std::vector<std::vector<uint32_t>> out;
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t s = 0; s < img_.size(); ++s) {
    if (seen[s] || img_[s] == s) continue;
    std::vector<uint32_t> cyc;
    uint32_t p = s;
    while (!seen[p]) {
      seen[p] = true;
      cyc.push_back(p);
      p = img_[p];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

uint64_t Perm::order() const {
  uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, uint64_t(c.size()));
  return o;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image words
  std::size_t h = 1469598103934665603ull;
  for (uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Perm parse_perm(const std::string& text, uint32_t degree) {
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                               text[i] == ','))
      ++i;
  };
  bool any_cycle = false;
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '('");
    ++i;
    std::vector<uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point or ')'");
      uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + uint64_t(text[i] - '0');
        if (v > 0xffffffffull) throw std::invalid_argument("point out of range");
        ++i;
      }
      if (v >= degree)
        throw std::invalid_argument("point " + std::to_string(v) +
                                    " exceeds degree " + std::to_string(degree));
      cyc.push_back(static_cast<uint32_t>(v));
    }
    any_cycle = true;
    if (cyc.size() >= 2) {
      for (std::size_t j = 0; j < cyc.size(); ++j)
        for (std::size_t l = j + 1; l < cyc.size(); ++l)
          if (cyc[j] == cyc[l])
            throw std::invalid_argument("point " + std::to_string(cyc[j]) +
                                        " repeated");
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        uint32_t from = cyc[j], to = cyc[(j + 1) % cyc.size()];
        if (img[from] != from)
          throw std::invalid_argument("point " + std::to_string(from) +
                                      " repeated");
        img[from] = to;
      }
      // a point first used as an image and later as a source in another
      // cycle still slips through; the bijection check in Perm catches it
    }
    skip_ws();
  }
  if (!any_cycle) throw std::invalid_argument("empty permutation text");
  return Perm(std::move(img));
}

}  // namespace cd1lab
