#include <map>
#include <utility>
#include <vector>

#include "pnl/field.hpp"

namespace pnl {
namespace {

// Pinned moduli: for each (p, n) the monic primitive polynomial whose low
// coefficients, read as a base-p integer, are smallest. Coefficients are
// listed low to high. Regenerate with scripts/gen_moduli.py.
struct Entry {
  unsigned p;
  unsigned n;
  std::vector<unsigned> coeffs;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> entries = {
    {2, 1, {1, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
    {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 1, {1, 1}},
    {3, 2, {2, 1, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 1, 0, 0, 0, 0, 1}},
    {3, 7, {1, 2, 1, 0, 0, 0, 0, 1}},
    {3, 8, {2, 0, 0, 1, 0, 0, 0, 0, 1}},
    {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
    {3, 10, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
    {3, 11, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 12, {2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 13, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 1, {2, 1}},
    {5, 2, {2, 1, 1}},
    {5, 3, {2, 3, 0, 1}},
    {5, 4, {2, 2, 1, 0, 1}},
    {5, 5, {2, 4, 0, 0, 0, 1}},
    {5, 6, {2, 1, 0, 0, 0, 0, 1}},
    {5, 7, {2, 3, 0, 0, 0, 0, 0, 1}},
    {5, 8, {3, 2, 1, 0, 0, 0, 0, 0, 1}},
    {5, 9, {3, 2, 1, 0, 0, 0, 0, 0, 0, 1}},
    {5, 10, {3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 11, {2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 12, {3, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 13, {2, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {7, 1, {2, 1}},
    {7, 2, {3, 1, 1}},
    {7, 3, {2, 3, 0, 1}},
    {7, 4, {5, 3, 1, 0, 1}},
    {7, 5, {4, 1, 0, 0, 0, 1}},
    {7, 6, {5, 1, 3, 0, 0, 0, 1}},
    {7, 7, {2, 6, 0, 0, 0, 0, 0, 1}},
    {7, 8, {3, 1, 0, 0, 0, 0, 0, 0, 1}},
    {7, 9, {2, 1, 1, 0, 0, 0, 0, 0, 0, 1}},
    {7, 10, {5, 1, 5, 0, 0, 0, 0, 0, 0, 0, 1}},
    {7, 11, {4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {7, 12, {3, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {7, 13, {2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {11, 1, {3, 1}},
    {11, 2, {7, 1, 1}},
    {11, 3, {4, 1, 0, 1}},
    {11, 4, {2, 1, 0, 0, 1}},
    {11, 5, {4, 1, 1, 0, 0, 1}},
    {11, 6, {8, 2, 1, 0, 0, 0, 1}},
    {11, 7, {4, 1, 0, 0, 0, 0, 0, 1}},
    {11, 8, {6, 2, 1, 0, 0, 0, 0, 0, 1}},
    {11, 9, {9, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
    {11, 10, {6, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
    {11, 11, {3, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {11, 12, {7, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {11, 13, {4, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
  };
  return entries;
}

}  // namespace

std::optional<std::vector<unsigned>> Field::builtin_modulus(unsigned p, unsigned n) {
  for (const auto& e : table())
    if (e.p == p && e.n == n) return e.coeffs;
  return std::nullopt;
}

}  // namespace pnl
