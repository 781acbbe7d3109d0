#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace katzp {

/// Binomial coefficients mod p from Pascal's rule, rows 0..max_n.
class PascalTable {
 public:
  PascalTable(std::uint32_t p, std::size_t max_n) : p_(p), rows_(max_n + 1) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      rows_[n].assign(n + 1, 1 % p);
      for (std::size_t k = 1; k < n; ++k) rows_[n][k] = (rows_[n - 1][k - 1] + rows_[n - 1][k]) % p;
    }
  }
  std::uint32_t operator()(std::size_t n, std::size_t k) const { return k > n ? 0 : rows_.at(n)[k]; }
  std::uint32_t prime() const { return p_; }

 private:
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

}  // namespace katzp
