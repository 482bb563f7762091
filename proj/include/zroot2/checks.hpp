#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "zroot2/hom.hpp"
#include "zroot2/json_io.hpp"
#include "zroot2/matrix.hpp"
#include "zroot2/ring.hpp"
#include "zroot2/rng.hpp"
#include "zroot2/seqgroup.hpp"
#include "zroot2/small_elements.hpp"
#include "zroot2/snf.hpp"
#include "zroot2/witness.hpp"

// Randomized invariant suites over the whole library. These back the CLI
// `selftest` command and the acceptance harness; every suite is
// deterministic for a fixed seed.

namespace zroot2 {

struct CheckResult {
  std::string name;
  bool pass = false;
  Json data = Json::object();
};

inline CheckResult check_ring_axioms(int degree, long trials, std::uint64_t seed) {
  RingParams params(degree);
  Rng rng(seed);
  bool ok = true;
  for (long t = 0; t < trials && ok; ++t) {
    RingElem x = random_ring_elem(params, 50, rng);
    RingElem y = random_ring_elem(params, 50, rng);
    RingElem z = random_ring_elem(params, 50, rng);
    ok = ok && (x + y) + z == x + (y + z);
    ok = ok && x + y == y + x;
    ok = ok && (x * y) * z == x * (y * z);
    ok = ok && x * y == y * x;
    ok = ok && x * (y + z) == x * y + x * z;
    ok = ok && x + RingElem::zero(params) == x;
    ok = ok && x * RingElem::one(params) == x;
    ok = ok && x + (-x) == RingElem::zero(params);
  }
  return {"ring axioms (degree " + std::to_string(degree) + ")", ok,
          Json{{"degree", degree}, {"trials", trials}}};
}

inline CheckResult check_norm_multiplicativity(int degree, long trials, std::uint64_t seed) {
  RingParams params(degree);
  Rng rng(seed);
  bool ok = true;
  for (long t = 0; t < trials && ok; ++t) {
    RingElem x = random_ring_elem(params, 50, rng);
    RingElem y = random_ring_elem(params, 50, rng);
    ok = ok && norm(x * y) == norm(x) * norm(y);
    ok = ok && (norm(x) == 0) == x.is_zero();
  }
  return {"norm multiplicativity (degree " + std::to_string(degree) + ")", ok,
          Json{{"degree", degree}, {"trials", trials}}};
}

inline CheckResult check_rep_homomorphism(int degree, long trials, std::uint64_t seed) {
  RingParams params(degree);
  Rng rng(seed);
  bool ok = true;
  for (long t = 0; t < trials && ok; ++t) {
    RingElem x = random_ring_elem(params, 50, rng);
    RingElem y = random_ring_elem(params, 50, rng);
    ok = ok && regular_rep(x + y) == regular_rep(x) + regular_rep(y);
    ok = ok && regular_rep(x * y) == regular_rep(x) * regular_rep(y);
  }
  return {"regular representation is a ring homomorphism (degree " + std::to_string(degree) + ")", ok,
          Json{{"degree", degree}, {"trials", trials}}};
}

// Agreement of the exact trichotomy with a long-double evaluation wherever
// the floating margin is comfortably above the rounding noise.
inline CheckResult check_compare_abs_oracle(long trials, std::uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  long used = 0;
  for (long t = 0; t < trials && ok; ++t) {
    const int degree = static_cast<int>(rng.uniform(2, 5));
    RingParams params(degree);
    RingElem x = random_ring_elem(params, 1000, rng);
    Rat bound(rng.uniform(0, 20000), rng.uniform(1, 1000));
    bound.canonicalize();

    const long double root = std::pow(2.0L, 1.0L / degree);
    long double value = 0.0L, p = 1.0L;
    for (int i = 0; i < degree; ++i) {
      value += static_cast<long double>(x.coeffs()[i].get_d()) * p;
      p *= root;
    }
    const long double fb = static_cast<long double>(bound.get_d());
    const long double margin = std::fabs(std::fabs(value) - fb);
    if (margin <= 1e-6L) continue;
    ++used;
    auto cmp = compare_abs(x, bound);
    const bool expect_less = std::fabs(value) < fb;
    ok = ok && cmp == (expect_less ? std::strong_ordering::less : std::strong_ordering::greater);
    if (cmp == std::strong_ordering::equal) ok = ok && x.is_rational_integer();
  }
  // Exact-tie side: equality only on rational integers.
  for (long t = 0; t < 50 && ok; ++t) {
    RingParams params(2);
    Int c = rng.uniform(-1000, 1000);
    RingElem x = RingElem::integer(params, c);
    ok = ok && compare_abs(x, Rat(abs(c))) == std::strong_ordering::equal;
  }
  return {"compare_abs agrees with floating oracle", ok, Json{{"trials", trials}, {"decided", used}}};
}

inline CheckResult check_small_elements(int max_degree, long kmax) {
  bool ok = true;
  for (int degree = 2; degree <= max_degree && ok; ++degree) {
    RingParams params(degree);
    const RingElem u = root_minus_one(params);
    RingElem prev = u;
    for (long k = 1; k <= kmax && ok; ++k) {
      ok = ok && small_element(params, k) == prev;
      ok = ok && !prev.is_zero();
      ok = ok && compare_abs(prev, Rat(1)) == std::strong_ordering::less;
      prev *= u;
    }
  }
  // Degree 2: the powers are units, and the root coefficient grows strictly.
  RingParams p2(2);
  Int prev_b(0);
  RingElem pw = RingElem::one(p2);
  for (long k = 1; k <= kmax && ok; ++k) {
    pw *= root_minus_one(p2);
    Int nrm = norm(pw);
    ok = ok && (nrm == 1 || nrm == -1);
    Int b = abs(pw.coeffs()[1]);
    ok = ok && b > prev_b;
    prev_b = b;
  }
  return {"small elements: powers of 2^(1/n) - 1", ok,
          Json{{"max_degree", max_degree}, {"kmax", kmax}}};
}

// Module homs are exactly the regular representations; the witness element
// can be read off the first column.
inline CheckResult check_module_hom_characterization(long trials, std::uint64_t seed) {
  RingParams params(2);
  Rng rng(seed);
  bool ok = true;
  for (long t = 0; t < trials && ok; ++t) {
    RingElem x = random_ring_elem(params, 100, rng);
    ok = ok && is_module_hom(GroupHom::multiplication_by(x));
    GroupHom h = random_group_hom(params, 100, rng);
    std::vector<Int> col0;
    for (int r = 0; r < params.degree; ++r) col0.push_back(h.matrix().at(r, 0));
    const bool is_rep = h.matrix() == regular_rep(RingElem(params, col0));
    ok = ok && is_module_hom(h) == is_rep;
  }
  return {"module homs are exactly multiplications by ring elements", ok, Json{{"trials", trials}}};
}

inline CheckResult check_epsilon_witness_termination(long homs, std::uint64_t seed) {
  RingParams params(2);
  Rng rng(seed);
  bool ok = true;
  long max_k = 0;
  const std::vector<Rat> ns = {Rat(10), Rat(1000), Rat(1000000)};
  for (long t = 0; t < homs && ok; ++t) {
    GroupHom theta = random_non_module_hom(params, 50, rng);
    for (const Rat& n : ns) {
      EpsilonWitness w = epsilon_witness(theta, Rat(1), n);
      if (w.k > max_k) max_k = w.k;
      ok = ok && w.k <= 200;
      ok = ok && compare_abs(w.x, Rat(1)) == std::strong_ordering::less;
      ok = ok && compare_abs(w.image, n) == std::strong_ordering::greater;
    }
  }
  return {"epsilon witness terminates with k <= 200 (degree 2, entries <= 50)", ok,
          Json{{"homs", homs}, {"max_k", max_k}}};
}

inline CheckResult check_functional_additivity(long trials, std::uint64_t seed) {
  RingParams params(2);
  Rng rng(seed);
  bool ok = true;
  for (long t = 0; t < trials && ok; ++t) {
    std::vector<Functional::Entry> entries;
    std::size_t index = 0;
    const long k = rng.uniform(0, 4);
    for (long i = 0; i < k; ++i) {
      index += static_cast<std::size_t>(rng.uniform(0, 3));
      entries.emplace_back(index, random_group_hom(params, 20, rng));
      ++index;
    }
    Functional f(params, std::move(entries));
    FinSeq a = random_finseq(params, 8, 100, rng);
    FinSeq b = random_finseq(params, 8, 100, rng);
    ok = ok && eval_functional(f, a + b) == eval_functional(f, a) + eval_functional(f, b);
  }
  return {"finite functionals are additive", ok, Json{{"trials", trials}}};
}

inline CheckResult check_row_finite_composition(long trials, std::uint64_t seed) {
  RingParams params(2);
  Rng rng(seed);
  bool ok = true;
  for (long t = 0; t < trials && ok; ++t) {
    RowFiniteMatrix g = random_row_finite(params, 10, rng);
    RowFiniteMatrix h = random_row_finite(params, 10, rng);
    FinSeq a = random_finseq(params, 6, 50, rng);
    ok = ok && apply_row_finite(compose_row_finite(g, h), a) == apply_row_finite(g, apply_row_finite(h, a));
    FinSeq b = random_finseq(params, 6, 50, rng);
    ok = ok && apply_row_finite(g, a + b) == apply_row_finite(g, a) + apply_row_finite(g, b);
  }
  return {"row-finite matrices compose and act additively", ok, Json{{"trials", trials}}};
}

inline CheckResult check_witness_roundtrips(long trials, std::uint64_t seed) {
  RingParams params(2);
  Rng rng(seed);
  bool ok = true;
  std::vector<std::pair<std::string, IsoWitness>> witnesses;
  witnesses.emplace_back("shift", shift_witness(params));
  witnesses.emplace_back("interleave", interleave_witness(params));
  witnesses.emplace_back("split", split_witness(params));
  witnesses.emplace_back("absorb-free", absorb_free_witness(params));
  for (long n = 1; n <= 3; ++n)
    witnesses.emplace_back("corner(" + std::to_string(n) + ")", corner_witness(n, params).witness);

  for (const auto& [name, w] : witnesses) {
    const IsoWitness inv = w.inverted();
    ok = ok && inv.source() == w.target() && inv.target() == w.source();
    for (long t = 0; t < trials && ok; ++t) {
      Element e = random_element(w.source(), 16, 1000000, rng);
      Element image = w.apply(e);
      ok = ok && image.shape() == w.target();
      ok = ok && inv.apply(image) == e;
      Element f = random_element(w.source(), 16, 1000000, rng);
      ok = ok && w.apply(e + f) == image + w.apply(f);
    }
    if (!ok) return {"isomorphism witness round trips (" + name + ")", false, Json{{"trials", trials}}};
  }
  return {"isomorphism witness round trips and additivity", ok,
          Json{{"trials", trials}, {"witnesses", witnesses.size()}}};
}

inline CheckResult check_theta_support(long trials, std::uint64_t seed) {
  RingParams params(2);
  Rng rng(seed);
  bool ok = true;
  for (long t = 0; t < trials && ok; ++t) {
    FinSeq a = random_finseq(params, 12, 100, rng);
    for (std::size_t k = 0; k <= 8 && ok; ++k) {
      FinSeq image = theta_los(a, FinSeq::basis(params, k, RingElem::one(params)));
      for (std::size_t i = k; i < a.support() + 2 && ok; ++i) ok = image.term(i) == a.term(i);
    }
    FinSeq b1 = random_finseq(params, 8, 50, rng);
    FinSeq b2 = random_finseq(params, 8, 50, rng);
    ok = ok && theta_los(a, b1 + b2) == theta_los(a, b1) + theta_los(a, b2);
  }
  return {"theta(e_k) agrees with a from index k on; theta additive in b", ok, Json{{"trials", trials}}};
}

inline bool snf_contract_holds(const IntMatrix& m, const SNFResult& snf) {
  if (!(snf.u * m * snf.v == snf.d)) return false;
  Int du = determinant(snf.u);
  Int dv = determinant(snf.v);
  if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1)) return false;
  const std::size_t k = m.rows() < m.cols() ? m.rows() : m.cols();
  bool seen_zero = false;
  for (std::size_t i = 0; i < k; ++i) {
    const Int& di = snf.d.at(i, i);
    if (di < 0) return false;
    if (di == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;  // zeros must trail
    if (i + 1 < k && snf.d.at(i + 1, i + 1) != 0 &&
        !mpz_divisible_p(snf.d.at(i + 1, i + 1).get_mpz_t(), di.get_mpz_t()))
      return false;
  }
  // Off-diagonal entries must vanish.
  for (std::size_t r = 0; r < snf.d.rows(); ++r)
    for (std::size_t c = 0; c < snf.d.cols(); ++c)
      if (r != c && snf.d.at(r, c) != 0) return false;
  return true;
}

inline CheckResult check_snf_contract(long trials, std::uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  for (long t = 0; t < trials && ok; ++t) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 8));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 8));
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.uniform(-100, 100);
    SNFResult snf = smith_normal_form(m);
    ok = ok && snf_contract_holds(m, snf);
    ok = ok && snf.rank() == rank_fraction_free(m);
  }
  return {"Smith normal form contract and rank oracle agreement", ok, Json{{"trials", trials}}};
}

inline CheckResult check_obstruction_parity(long trials_per_degree, std::uint64_t seed) {
  bool ok = true;
  Json per_degree = Json::object();
  for (int degree = 2; degree <= 4 && ok; ++degree) {
    RingParams params(degree);
    Rng rng(seed + static_cast<std::uint64_t>(degree));
    long injective_done = 0;
    for (long t = 0; t < trials_per_degree && ok; ++t) {
      // Rank divisibility for arbitrary module matrices.
      {
        const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 5));
        const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 5));
        ModuleMatrix m = random_module_matrix(params, rows, cols, 5, rng);
        const IntMatrix realized = realize_over_Z(m);
        ok = ok && rank_fraction_free(realized) % static_cast<std::size_t>(degree) == 0;
      }
      // Free-rank divisibility for injective maps with more rows.
      {
        const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 4));
        const std::size_t rows = cols + static_cast<std::size_t>(rng.uniform(1, 2));
        ModuleMatrix m = random_injective_module_matrix(params, rows, cols, 5, rng);
        ObstructionResult obs = obstruction_check(m);
        ok = ok && obs.parity_ok;
        ok = ok && obs.coker.free_rank % static_cast<std::size_t>(degree) == 0;
        ++injective_done;
      }
    }
    per_degree[std::to_string(degree)] = injective_done;
  }
  return {"cokernel free rank of ring-linear maps is divisible by the degree", ok,
          Json{{"trials_per_degree", trials_per_degree}, {"injective_trials", per_degree}}};
}

inline CheckResult check_shift_truncation_cokernel() {
  bool ok = true;
  Json data = Json::object();
  for (int degree = 2; degree <= 3 && ok; ++degree) {
    RingParams params(degree);
    for (std::size_t k = 1; k <= 4 && ok; ++k) {
      ObstructionResult obs = obstruction_check(shift_truncation(params, k));
      ok = ok && obs.coker.free_rank == static_cast<std::size_t>(degree);
      ok = ok && obs.coker.torsion.empty();
      ok = ok && obs.parity_ok;
    }
  }
  data["free_rank_equals_degree"] = ok;
  return {"truncated shift embedding has cokernel Z^degree", ok, data};
}

inline CheckResult check_realize_multiplicative(long trials, std::uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  for (long t = 0; t < trials && ok; ++t) {
    const int degree = static_cast<int>(rng.uniform(2, 4));
    RingParams params(degree);
    const std::size_t a = static_cast<std::size_t>(rng.uniform(1, 3));
    const std::size_t b = static_cast<std::size_t>(rng.uniform(1, 3));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 3));
    ModuleMatrix m = random_module_matrix(params, a, b, 5, rng);
    ModuleMatrix n = random_module_matrix(params, b, c, 5, rng);
    ok = ok && realize_over_Z(m * n) == realize_over_Z(m) * realize_over_Z(n);
  }
  return {"realization over Z is multiplicative", ok, Json{{"trials", trials}}};
}

// The full suite at its standard trial counts. Runs in a few seconds.
inline std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (int degree = 2; degree <= 5; ++degree) {
    out.push_back(check_ring_axioms(degree, 200, seed));
    out.push_back(check_norm_multiplicativity(degree, 1000, seed + 1));
    out.push_back(check_rep_homomorphism(degree, 1000, seed + 2));
  }
  out.push_back(check_compare_abs_oracle(1000, seed + 3));
  out.push_back(check_small_elements(5, 40));
  out.push_back(check_module_hom_characterization(500, seed + 4));
  out.push_back(check_epsilon_witness_termination(100, seed + 5));
  out.push_back(check_functional_additivity(200, seed + 6));
  out.push_back(check_row_finite_composition(100, seed + 7));
  out.push_back(check_witness_roundtrips(100, seed + 8));
  out.push_back(check_theta_support(50, seed + 9));
  out.push_back(check_snf_contract(500, seed + 10));
  out.push_back(check_obstruction_parity(200, seed + 11));
  out.push_back(check_shift_truncation_cokernel());
  out.push_back(check_realize_multiplicative(100, seed + 12));
  return out;
}

}  // namespace zroot2
