#pragma once

#include <cstdint>
#include <vector>

#include "pacdim/errors.hpp"

namespace pacdim {

/// Finite instance space; points are 0..size-1.
struct Domain {
  int size = 1;

  Domain() = default;
  explicit Domain(int n) : size(n) {
    if (n < 1) throw validation_error("domain size must be >= 1");
  }
  bool operator==(const Domain&) const = default;
};

/// Subset of a Domain stored as 64-bit blocks.
class DomainSet {
 public:
  DomainSet() = default;
  explicit DomainSet(Domain d) : domain_(d), blocks_((d.size + 63) / 64, 0) {}

  static DomainSet from_points(Domain d, const std::vector<int>& points) {
    DomainSet s(d);
    for (int p : points) s.set(p);
    return s;
  }
  static DomainSet full(Domain d) {
    DomainSet s(d);
    for (auto& b : s.blocks_) b = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  Domain domain() const { return domain_; }
  int domain_size() const { return domain_.size; }

  bool test(int p) const {
    check_point(p);
    return (blocks_[p >> 6] >> (p & 63)) & 1;
  }
  void set(int p, bool value = true) {
    check_point(p);
    if (value)
      blocks_[p >> 6] |= std::uint64_t{1} << (p & 63);
    else
      blocks_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
  }

  int count() const {
    int c = 0;
    for (auto b : blocks_) c += __builtin_popcountll(b);
    return c;
  }
  bool empty() const {
    for (auto b : blocks_) if (b) return false;
    return true;
  }

  bool is_subset_of(const DomainSet& other) const {
    check_same_domain(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~other.blocks_[i]) return false;
    return true;
  }
  bool intersects(const DomainSet& other) const {
    check_same_domain(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & other.blocks_[i]) return true;
    return false;
  }
  int intersection_count(const DomainSet& other) const {
    check_same_domain(other);
    int c = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      c += __builtin_popcountll(blocks_[i] & other.blocks_[i]);
    return c;
  }

  DomainSet& operator&=(const DomainSet& o) { return apply(o, [](std::uint64_t& a, std::uint64_t b) { a &= b; }); }
  DomainSet& operator|=(const DomainSet& o) { return apply(o, [](std::uint64_t& a, std::uint64_t b) { a |= b; }); }
  DomainSet& operator^=(const DomainSet& o) { return apply(o, [](std::uint64_t& a, std::uint64_t b) { a ^= b; }); }
  /// Intersects with the complement of `o` in place.
  DomainSet& subtract(const DomainSet& o) { return apply(o, [](std::uint64_t& a, std::uint64_t b) { a &= ~b; }); }

  friend DomainSet operator&(DomainSet a, const DomainSet& b) { return a &= b; }
  friend DomainSet operator|(DomainSet a, const DomainSet& b) { return a |= b; }
  friend DomainSet operator^(DomainSet a, const DomainSet& b) { return a ^= b; }
  DomainSet complement() const {
    DomainSet s(domain_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) s.blocks_[i] = ~blocks_[i];
    s.trim();
    return s;
  }

  bool operator==(const DomainSet& other) const = default;

  /// Lexicographic order on sorted point sequences ({0,2} < {0,3} < {1}).
  static bool lex_less(const DomainSet& a, const DomainSet& b);

  int find_first() const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(blocks_[i]));
    return -1;
  }
  int find_next(int p) const {
    ++p;
    if (p >= domain_.size) return -1;
    std::size_t i = p >> 6;
    std::uint64_t b = blocks_[i] & (~std::uint64_t{0} << (p & 63));
    while (true) {
      if (b) return static_cast<int>(i * 64 + __builtin_ctzll(b));
      if (++i >= blocks_.size()) return -1;
      b = blocks_[i];
    }
  }

  std::vector<int> points() const {
    std::vector<int> out;
    out.reserve(count());
    for (int p = find_first(); p >= 0; p = find_next(p)) out.push_back(p);
    return out;
  }

  const std::vector<std::uint64_t>& blocks() const { return blocks_; }

  void check_same_domain(const DomainSet& other) const {
    if (domain_ != other.domain_) throw validation_error("domain mismatch between sets");
  }

 private:
  template <typename Op>
  DomainSet& apply(const DomainSet& o, Op op) {
    check_same_domain(o);
    for (std::size_t i = 0; i < blocks_.size(); ++i) op(blocks_[i], o.blocks_[i]);
    trim();
    return *this;
  }
  void check_point(int p) const {
    if (p < 0 || p >= domain_.size) throw validation_error("point outside domain");
  }
  void trim() {
    int tail = domain_.size & 63;
    if (tail && !blocks_.empty()) blocks_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  Domain domain_{};
  std::vector<std::uint64_t> blocks_;
};

}  // namespace pacdim
