#include "lasg/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "lasg/errors.hpp"
#include "lasg/laws.hpp"

namespace lasg {

std::string_view filter_name(ModelFilter f) noexcept {
  switch (f) {
    case ModelFilter::HasLeftIdentity: return "has-left-identity";
    case ModelFilter::IntraRegular: return "intra-regular";
    case ModelFilter::LeftInvertible: return "left-invertible";
    case ModelFilter::RightInvertible: return "right-invertible";
    case ModelFilter::NotIntraRegular: return "not-intra-regular";
  }
  return "unknown";
}

std::optional<ModelFilter> parse_filter(std::string_view name) noexcept {
  for (auto f : {ModelFilter::HasLeftIdentity, ModelFilter::IntraRegular,
                 ModelFilter::LeftInvertible, ModelFilter::RightInvertible,
                 ModelFilter::NotIntraRegular}) {
    if (filter_name(f) == name) return f;
  }
  return std::nullopt;
}

bool passes_filter(const Magma& m, ModelFilter f) {
  switch (f) {
    case ModelFilter::HasLeftIdentity:
      return find_left_identity(m).has_value();
    case ModelFilter::IntraRegular:
      return is_intra_regular(m).intra_regular;
    case ModelFilter::NotIntraRegular:
      return !is_intra_regular(m).intra_regular;
    case ModelFilter::LeftInvertible:
      return find_left_identity(m) &&
             invertible_elements(m, Side::Left).is_full();
    case ModelFilter::RightInvertible:
      return find_left_identity(m) &&
             invertible_elements(m, Side::Right).is_full();
  }
  return false;
}

namespace {

using Cell = std::uint8_t;

constexpr Cell unassigned = 0xFF;

// Lexicographic comparison of the table relabeled by every permutation
// against the table itself. True iff no relabeling is smaller.
class CanonicalChecker {
 public:
  explicit CanonicalChecker(std::size_t n) : n_(n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<std::size_t> inv(n);
      for (std::size_t i = 0; i < n; ++i) inv[p[i]] = i;
      perms_.push_back(p);
      inverses_.push_back(std::move(inv));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  // False when some relabeling is already lexicographically smaller on the
  // cells it determines. Unassigned cells stop the comparison for that
  // relabeling, so a true result only means "not yet excluded".
  bool may_be_canonical(const std::vector<Cell>& t) const {
    for (std::size_t k = 1; k < perms_.size(); ++k) {
      const auto& p = perms_[k];
      const auto& inv = inverses_[k];
      for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
          Cell original = t[r * n_ + c];
          Cell source = t[inv[r] * n_ + inv[c]];
          if (original == unassigned || source == unassigned) goto next_perm;
          Cell relabeled = static_cast<Cell>(p[source]);
          if (relabeled < original) return false;
          if (relabeled > original) goto next_perm;
        }
      }
    next_perm:;
    }
    return true;
  }

  bool is_canonical(const std::vector<Cell>& t) const {
    for (std::size_t k = 1; k < perms_.size(); ++k) {
      const auto& p = perms_[k];
      const auto& inv = inverses_[k];
      for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
          Cell relabeled = static_cast<Cell>(p[t[inv[r] * n_ + inv[c]]]);
          Cell original = t[r * n_ + c];
          if (relabeled < original) return false;
          if (relabeled > original) goto next_perm;
        }
      }
    next_perm:;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> perms_;
  std::vector<std::vector<std::size_t>> inverses_;
};

class Backtracker {
 public:
  Backtracker(const SearchConfig& cfg, const CanonicalChecker* canon)
      : cfg_(cfg), n_(cfg.order), canon_(canon), t_(n_ * n_, unassigned) {}

  // Completes the table from `cell` onward with the given prefix already in
  // place. Returns the number of emitted models.
  std::size_t run(std::size_t cell, const ModelVisitor& visit) {
    if (cell == n_ * n_) {
      return emit(visit);
    }
    std::size_t count = 0;
    for (std::size_t v = 0; v < n_ && !stopped_; ++v) {
      t_[cell] = static_cast<Cell>(v);
      if (consistent(cell) &&
          (!canon_ || canon_->may_be_canonical(t_))) {
        count += run(cell + 1, visit);
      }
    }
    t_[cell] = unassigned;
    return count;
  }

  void stop() { stopped_ = true; }

  // Tries to place a fixed first row. False if it already violates the law.
  bool seed_first_row(const std::vector<Cell>& row) {
    for (std::size_t j = 0; j < n_; ++j) {
      t_[j] = row[j];
      if (!consistent(j)) return false;
    }
    return !canon_ || canon_->may_be_canonical(t_);
  }

 private:
  Cell at(std::size_t r, std::size_t c) const { return t_[r * n_ + c]; }

  // Checks every instance of (ab)c = (cb)a whose four cells are assigned
  // and which involves the cell just assigned.
  bool consistent(std::size_t cell) const {
    const std::size_t i = cell / n_;
    const std::size_t j = cell % n_;
    const Cell ij = at(i, j);
    // Cell as inner (a,b) = (i,j) on the left, or (c,b) on the right.
    for (std::size_t c = 0; c < n_; ++c) {
      Cell lhs = at(ij, c);
      Cell cj = at(c, j);
      if (lhs == unassigned || cj == unassigned) continue;
      Cell rhs = at(cj, i);
      if (rhs != unassigned && lhs != rhs) return false;
    }
    // Cell as outer (ab, c) with ab = i and c = j.
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (at(a, b) != i) continue;
        Cell jb = at(j, b);
        if (jb == unassigned) continue;
        Cell rhs = at(jb, a);
        if (rhs != unassigned && rhs != ij) return false;
      }
    }
    return true;
  }

  std::size_t emit(const ModelVisitor& visit) {
    if (canon_ && !canon_->is_canonical(t_)) return 0;
    std::vector<ElemId> table(t_.size());
    std::transform(t_.begin(), t_.end(), table.begin(),
                   [](Cell c) { return elem(c); });
    Magma m = Magma::with_default_labels(n_, std::move(table));
    for (ModelFilter f : cfg_.filters) {
      if (!passes_filter(m, f)) return 0;
    }
    visit(m);
    return 1;
  }

  const SearchConfig& cfg_;
  std::size_t n_;
  const CanonicalChecker* canon_;
  std::vector<Cell> t_;
  bool stopped_ = false;
};

std::vector<std::vector<Cell>> all_first_rows(std::size_t n) {
  std::vector<std::vector<Cell>> rows;
  std::vector<Cell> row(n, 0);
  for (;;) {
    rows.push_back(row);
    std::size_t k = n;
    while (k-- > 0) {
      if (++row[k] < n) break;
      row[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return rows;
}

}  // namespace

CanonicalForm canonical_form(const Magma& m) {
  const std::size_t n = m.order();
  if (n > max_canonical_order) {
    throw OrderTooLarge(n, max_canonical_order);
  }
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::size_t> inv(n);
  CanonicalForm best{n, {}};
  std::vector<ElemId> candidate(n * n);
  do {
    for (std::size_t i = 0; i < n; ++i) inv[p[i]] = i;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        candidate[r * n + c] =
            elem(p[index_of(m.product(elem(inv[r]), elem(inv[c])))]);
      }
    }
    if (best.cells.empty() || candidate < best.cells) best.cells = candidate;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

bool is_isomorphic(const Magma& a, const Magma& b) {
  if (a.order() > max_canonical_order) {
    throw OrderTooLarge(a.order(), max_canonical_order);
  }
  if (b.order() > max_canonical_order) {
    throw OrderTooLarge(b.order(), max_canonical_order);
  }
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

Magma relabel(const Magma& m, const std::vector<std::size_t>& perm) {
  const std::size_t n = m.order();
  if (perm.size() != n) {
    throw std::invalid_argument("permutation size does not match order");
  }
  std::vector<ElemId> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[perm[i] * n + perm[j]] =
          elem(perm[index_of(m.product(elem(i), elem(j)))]);
    }
  }
  return Magma::with_default_labels(n, std::move(table));
}

namespace {

void check_order(const SearchConfig& cfg) {
  if (cfg.order == 0) {
    throw std::invalid_argument("order must be at least 1");
  }
  if (cfg.order > max_enumeration_order) {
    throw OrderTooLarge(cfg.order, max_enumeration_order);
  }
}

}  // namespace

std::size_t enumerate_models(const SearchConfig& cfg,
                             const ModelVisitor& visit) {
  check_order(cfg);
  std::optional<CanonicalChecker> canon;
  if (cfg.up_to_iso) canon.emplace(cfg.order);
  const CanonicalChecker* canon_ptr = canon ? &*canon : nullptr;

  if (cfg.workers <= 1) {
    Backtracker search(cfg, canon_ptr);
    return search.run(0, visit);
  }

  // Partition by first row; each worker buffers its partitions and the
  // buffers are replayed in first-row order.
  const auto rows = all_first_rows(cfg.order);
  std::vector<std::vector<Magma>> buffers(rows.size());
  std::vector<std::thread> threads;
  const unsigned workers =
      std::min<unsigned>(cfg.workers, static_cast<unsigned>(rows.size()));
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t r = w; r < rows.size(); r += workers) {
        Backtracker search(cfg, canon_ptr);
        if (!search.seed_first_row(rows[r])) continue;
        search.run(cfg.order,
                   [&](const Magma& m) { buffers[r].push_back(m); });
      }
    });
  }
  for (auto& t : threads) t.join();

  std::size_t count = 0;
  for (const auto& buffer : buffers) {
    for (const auto& m : buffer) {
      visit(m);
      ++count;
    }
  }
  return count;
}

std::vector<Magma> collect_models(const SearchConfig& cfg) {
  std::vector<Magma> out;
  enumerate_models(cfg, [&out](const Magma& m) { out.push_back(m); });
  return out;
}

std::optional<Magma> find_model(
    const SearchConfig& cfg, const std::function<bool(const Magma&)>& pred) {
  check_order(cfg);
  std::optional<CanonicalChecker> canon;
  if (cfg.up_to_iso) canon.emplace(cfg.order);
  Backtracker search(cfg, canon ? &*canon : nullptr);
  std::optional<Magma> found;
  search.run(0, [&](const Magma& m) {
    if (!found && pred(m)) {
      found = m;
      search.stop();
    }
  });
  return found;
}

}  // namespace lasg
