#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "semibrace/error.hpp"

namespace semibrace {

// Operation table of a binary operation on {0, ..., n - 1}, row-major.
class CayleyTable {
 public:
  CayleyTable() = default;

  explicit CayleyTable(std::size_t order) : n_(order), cells_(order * order, 0) {}

  CayleyTable(std::size_t order, std::vector<element_t> cells)
      : n_(order), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) {
      throw Error(ErrorKind::InvalidTable,
                  "expected " + std::to_string(n_ * n_) + " cells, got "
                      + std::to_string(cells_.size()));
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (cells_[i] >= n_) {
        throw Error(ErrorKind::InvalidTable,
                    "entry out of range",
                    {static_cast<element_t>(i / n_), static_cast<element_t>(i % n_)});
      }
    }
  }

  static CayleyTable from_rows(std::vector<std::vector<element_t>> const& rows) {
    std::vector<element_t> cells;
    cells.reserve(rows.size() * rows.size());
    for (auto const& row : rows) {
      if (row.size() != rows.size()) {
        throw Error(ErrorKind::InvalidTable, "table is not square");
      }
      cells.insert(cells.end(), row.begin(), row.end());
    }
    return CayleyTable(rows.size(), std::move(cells));
  }

  template <typename F>
  static CayleyTable from_function(std::size_t order, F&& f) {
    std::vector<element_t> cells(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        cells[a * order + b] = static_cast<element_t>(
            f(static_cast<element_t>(a), static_cast<element_t>(b)));
      }
    }
    return CayleyTable(order, std::move(cells));
  }

  std::size_t order() const noexcept { return n_; }

  element_t operator()(element_t a, element_t b) const noexcept { return cells_[a * n_ + b]; }

  void set(element_t a, element_t b, element_t value) noexcept { cells_[a * n_ + b] = value; }

  std::span<element_t const> row(element_t a) const noexcept {
    return {cells_.data() + a * n_, n_};
  }

  std::vector<element_t> const& cells() const noexcept { return cells_; }

  std::vector<std::vector<element_t>> rows() const {
    std::vector<std::vector<element_t>> out(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      out[a].assign(cells_.begin() + a * n_, cells_.begin() + (a + 1) * n_);
    }
    return out;
  }

  // The table transported along the bijection old -> sigma[old].
  CayleyTable relabeled(std::span<element_t const> sigma) const {
    CayleyTable out(n_);
    for (element_t a = 0; a < n_; ++a) {
      for (element_t b = 0; b < n_; ++b) {
        out.set(sigma[a], sigma[b], sigma[(*this)(a, b)]);
      }
    }
    return out;
  }

  friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<element_t> cells_;
};

}  // namespace semibrace
