#include "lsa/generators.hpp"

#include "lsa/error.hpp"
#include "lsa/rng.hpp"

namespace lsa {

Instance example_partial_gap() {
  Instance inst = Instance::zeros(2);
  inst.set_value(0, 0, 0, 1);
  inst.set_value(1, 1, 1, 1);
  return inst;
}

Instance example_no_fair_complete() {
  Instance inst = Instance::zeros(2);
  for (int i = 0; i < 2; ++i) {
    inst.set_value(i, 0, 0, 1);
    inst.set_value(i, 1, 1, 1);
  }
  return inst;
}

Instance random_instance(int n, Value max_value, std::uint64_t seed) {
  if (n < 1 || max_value < 0) throw InputError("random instance needs n >= 1 and max_value >= 0");
  Rng rng(seed);
  Instance inst = Instance::zeros(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        inst.set_value(i, j, k, static_cast<Value>(rng.below(static_cast<std::uint64_t>(max_value) + 1)));
      }
    }
  }
  return inst;
}

Instance random_binary(int n, double density, std::uint64_t seed) {
  if (n < 1) throw InputError("random instance needs n >= 1");
  Rng rng(seed);
  Instance inst = Instance::zeros(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) inst.set_value(i, j, k, rng.uniform() < density ? 1 : 0);
    }
  }
  return inst;
}

Instance random_sparse(int n, int positive_cells, Value max_value, std::uint64_t seed) {
  if (n < 1 || max_value < 1) throw InputError("sparse instance needs n >= 1 and max_value >= 1");
  Rng rng(seed);
  Instance inst = Instance::zeros(n);
  const auto un = static_cast<std::uint64_t>(n);
  for (int e = 0; e < positive_cells; ++e) {
    const int i = static_cast<int>(rng.below(un));
    const int j = static_cast<int>(rng.below(un));
    const int k = static_cast<int>(rng.below(un));
    inst.set_value(i, j, k, 1 + static_cast<Value>(rng.below(static_cast<std::uint64_t>(max_value))));
  }
  return inst;
}

Instance random_identical(int n, Value max_value, std::uint64_t seed) {
  if (n < 1 || max_value < 0) throw InputError("random instance needs n >= 1 and max_value >= 0");
  Rng rng(seed);
  Instance inst = Instance::zeros(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const auto v = static_cast<Value>(rng.below(static_cast<std::uint64_t>(max_value) + 1));
      for (int i = 0; i < n; ++i) inst.set_value(i, j, k, v);
    }
  }
  return inst;
}

}  // namespace lsa
