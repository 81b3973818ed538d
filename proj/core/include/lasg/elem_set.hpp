#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace lasg {

// Index of an element inside a specific magma. Only meaningful relative to
// that magma's order.
enum class ElemId : std::uint8_t {};

constexpr ElemId elem(std::size_t index) noexcept {
  return static_cast<ElemId>(index);
}

constexpr std::size_t index_of(ElemId e) noexcept {
  return static_cast<std::size_t>(e);
}

// Dense subset of [0, order), order <= 64. One word per set.
class ElemSet {
 public:
  static constexpr std::size_t max_order = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElemId;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = ElemId;

    iterator() = default;
    explicit constexpr iterator(std::uint64_t rest) noexcept : rest_(rest) {}

    constexpr ElemId operator*() const noexcept {
      return elem(static_cast<std::size_t>(std::countr_zero(rest_)));
    }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElemSet() noexcept = default;
  explicit constexpr ElemSet(std::size_t order) noexcept
      : order_(static_cast<std::uint8_t>(order)) {
    assert(order <= max_order);
  }

  static constexpr ElemSet from_mask(std::size_t order,
                                     std::uint64_t mask) noexcept {
    ElemSet s(order);
    s.bits_ = mask & full_mask(order);
    return s;
  }
  static constexpr ElemSet full(std::size_t order) noexcept {
    return from_mask(order, full_mask(order));
  }
  static constexpr ElemSet singleton(std::size_t order, ElemId e) noexcept {
    ElemSet s(order);
    s.insert(e);
    return s;
  }

  static constexpr std::uint64_t full_mask(std::size_t order) noexcept {
    return order >= 64 ? ~std::uint64_t{0}
                       : (std::uint64_t{1} << order) - 1;
  }

  constexpr std::size_t order() const noexcept { return order_; }
  constexpr std::uint64_t mask() const noexcept { return bits_; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool is_full() const noexcept {
    return bits_ == full_mask(order_);
  }

  constexpr bool contains(ElemId e) const noexcept {
    return index_of(e) < order_ && ((bits_ >> index_of(e)) & 1U) != 0;
  }
  constexpr void insert(ElemId e) noexcept {
    assert(index_of(e) < order_);
    bits_ |= std::uint64_t{1} << index_of(e);
  }
  constexpr void erase(ElemId e) noexcept {
    bits_ &= ~(std::uint64_t{1} << index_of(e));
  }

  constexpr bool is_subset_of(const ElemSet& other) const noexcept {
    assert(order_ == other.order_);
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ElemSet& operator|=(const ElemSet& o) noexcept {
    assert(order_ == o.order_);
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElemSet& operator&=(const ElemSet& o) noexcept {
    assert(order_ == o.order_);
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElemSet& operator-=(const ElemSet& o) noexcept {
    assert(order_ == o.order_);
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr ElemSet operator|(ElemSet a, const ElemSet& b) noexcept {
    return a |= b;
  }
  friend constexpr ElemSet operator&(ElemSet a, const ElemSet& b) noexcept {
    return a &= b;
  }
  friend constexpr ElemSet operator-(ElemSet a, const ElemSet& b) noexcept {
    return a -= b;
  }

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  // Sets order by (order, mask); ascending mask is the enumeration order.
  constexpr auto operator<=>(const ElemSet&) const noexcept = default;

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t order_ = 0;
};

}  // namespace lasg
