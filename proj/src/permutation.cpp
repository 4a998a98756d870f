#include "mbx/permutation.hpp"

#include <sstream>

#include "mbx/error.hpp"

namespace mbx::group {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InvalidPermutation("image array is not a bijection on " + std::to_string(images_.size()) +
                               " points");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree, bool one_based) {
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidPermutation("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw InvalidPermutation("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (start == pos) throw InvalidPermutation("bad point in cycle: " + std::string(text));
      std::size_t point = std::stoul(std::string(text.substr(start, pos - start)));
      if (one_based) {
        if (point == 0) throw InvalidPermutation("point 0 in 1-based cycle notation");
        --point;
      }
      if (point >= degree) throw InvalidPermutation("point out of range in " + std::string(text));
      if (used[point]) throw InvalidPermutation("point repeated in " + std::string(text));
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      im[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
    skip_ws();
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InvalidPermutation("degree mismatch in product");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::extended(std::size_t degree) const { return shifted(0, degree); }

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  if (offset + images_.size() > degree) throw InvalidPermutation("shifted permutation does not fit");
  Permutation out = identity(degree);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  }
  return out;
}

std::string Permutation::cycles(bool one_based) const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  std::size_t base = one_based ? 1 : 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j + base;
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree) {
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) {
      try {
        gens.push_back(Permutation::from_cycles(line, degree, true));
      } catch (const InvalidPermutation& e) {
        throw ParseError(line_no, 1, e.what());
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return gens;
}

}  // namespace mbx::group
