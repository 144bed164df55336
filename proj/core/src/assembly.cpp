#include "hyll/assembly.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "hyll/errors.hpp"

namespace hyll {

namespace {

// volume weight u(s^2 - t^2)
StuPolynomial weight_volume() {
  StuPolynomial w = StuPolynomial::monomial(Rational(1), 2, 1, 0, 0, Rational(0));
  w += StuPolynomial::monomial(Rational(-1), 0, 1, 2, 0, Rational(0));
  return w;
}

// s(u^2 - t^2), weight of the mixed s-u kinetic cross term
StuPolynomial weight_cross_su() {
  StuPolynomial w = StuPolynomial::monomial(Rational(1), 1, 2, 0, 0, Rational(0));
  w += StuPolynomial::monomial(Rational(-1), 1, 0, 2, 0, Rational(0));
  return w;
}

// t(s^2 - u^2), weight of the mixed t-u kinetic cross term
StuPolynomial weight_cross_tu() {
  StuPolynomial w = StuPolynomial::monomial(Rational(1), 2, 0, 1, 0, Rational(0));
  w += StuPolynomial::monomial(Rational(-1), 0, 2, 1, 0, Rational(0));
  return w;
}

ExactValue integrate_entry(const StuPolynomial& p, const RadialTable& table) {
  if (p.decay() != table.k())
    throw DivergentIntegral("integrate_entry: decay does not match radial table");
  ExactValue total;
  for (const StuMonomial& m : p.monomials()) {
    // products of F-basis functions and the kinetic/potential weights keep
    // even powers of t; an odd power here is an assembly bug
    if (m.t_pow % 2 != 0)
      throw DivergentIntegral("integrate_entry: odd t power in assembled integrand");
    const long c1 = m.t_pow + 1;
    const long bc2 = m.u_pow + m.t_pow + 2;
    const int a = m.s_pow + m.u_pow + m.t_pow + 2;
    total.add_scaled(m.coeff / Rational(c1 * bc2), table.integral(a, m.log_pow));
  }
  return total;
}

// Per-function data reused across all entries of an assembly.
struct TermCalculus {
  StuPolynomial phi;
  StuPolynomial d_s, d_u, d_t;
};

struct EntryWorkspace {
  std::vector<TermCalculus> funcs;
  StuPolynomial w_vol, w_su, w_tu, w_pot;
  RadialTable table;

  EntryWorkspace(const BasisSet& set, int max_power)
      : w_vol(weight_volume()),
        w_su(weight_cross_su()),
        w_tu(weight_cross_tu()),
        w_pot(weight_potential(set.Z)),
        table(set.k, max_power) {
    funcs.reserve(set.terms.size());
    for (const BasisTerm& t : set.terms) {
      TermCalculus c;
      c.phi = StuPolynomial::from_basis_term(t, set.k);
      c.d_s = differentiate(c.phi, Var::s);
      c.d_u = differentiate(c.phi, Var::u);
      c.d_t = differentiate(c.phi, Var::t);
      funcs.push_back(std::move(c));
    }
  }

  ExactValue overlap(std::size_t i, std::size_t j) const {
    return integrate_entry(product(product(funcs[i].phi, funcs[j].phi), w_vol), table);
  }

  ExactValue hamiltonian(std::size_t i, std::size_t j) const {
    const TermCalculus& f = funcs[i];
    const TermCalculus& g = funcs[j];
    StuPolynomial grad = product(f.d_s, g.d_s);
    grad += product(f.d_u, g.d_u);
    grad += product(f.d_t, g.d_t);
    StuPolynomial integrand = product(grad, w_vol);

    StuPolynomial cross_su = product(f.d_s, g.d_u);
    cross_su += product(f.d_u, g.d_s);
    integrand += product(cross_su, w_su);

    StuPolynomial cross_tu = product(f.d_t, g.d_u);
    cross_tu += product(f.d_u, g.d_t);
    integrand += product(cross_tu, w_tu);

    integrand += product(product(f.phi, g.phi), w_pot);
    return integrate_entry(integrand, table);
  }
};

int radial_power_bound(const BasisSet& set) { return 2 * set.omega + 6; }

void run_rows(const EntryWorkspace& ws, std::size_t row_begin, std::size_t row_end, int threads,
              const std::function<void(std::size_t, std::size_t, ExactValue, ExactValue)>& sink) {
  std::atomic<std::size_t> next_row{row_begin};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next_row.fetch_add(1);
      if (i >= row_end) return;
      for (std::size_t j = 0; j <= i; ++j) sink(i, j, ws.overlap(i, j), ws.hamiltonian(i, j));
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
}

void fill_rows(Pencil& pencil, const BasisSet& set, const PrecisionContext& ctx,
               AssemblyMode mode, int threads, std::size_t row_begin) {
  const std::size_t n = set.terms.size();
  const EntryWorkspace ws(set, radial_power_bound(set));
  const bool exact = mode == AssemblyMode::exact;

  if (exact) {
    const std::size_t have = pencil.S_exact.size();
    const std::size_t old_block = PackedSymmetric::packed_index(row_begin, 0);
    pencil.S_exact.resize(PackedSymmetric::packed_index(n, 0));
    pencil.H_exact.resize(PackedSymmetric::packed_index(n, 0));
    if (have < old_block) {
      // exact entries for the restored block are missing (checkpoint
      // restores realized values only); recompute them without touching
      // the realized floats
      std::size_t first_row = 0;
      while (PackedSymmetric::packed_index(first_row + 1, 0) <= have) ++first_row;
      run_rows(ws, first_row, row_begin, threads,
               [&](std::size_t i, std::size_t j, ExactValue s, ExactValue h) {
                 const std::size_t idx = PackedSymmetric::packed_index(i, j);
                 pencil.S_exact[idx] = std::move(s);
                 pencil.H_exact[idx] = std::move(h);
               });
    }
  } else {
    pencil.S_exact.clear();
    pencil.H_exact.clear();
  }

  run_rows(ws, row_begin, n, threads,
           [&](std::size_t i, std::size_t j, ExactValue s, ExactValue h) {
             const std::size_t idx = PackedSymmetric::packed_index(i, j);
             pencil.S.flat(idx) = s.realize(ctx);
             pencil.H.flat(idx) = h.realize(ctx);
             if (exact) {
               pencil.S_exact[idx] = std::move(s);
               pencil.H_exact[idx] = std::move(h);
             }
           });
}

}  // namespace

StuPolynomial weight_potential(const Rational& Z) {
  if (Z < 0) throw std::invalid_argument("weight_potential: negative nuclear charge");
  StuPolynomial w = StuPolynomial::monomial(Rational(-4) * Z, 1, 1, 0, 0, Rational(0));
  w += StuPolynomial::monomial(Rational(1), 2, 0, 0, 0, Rational(0));
  w += StuPolynomial::monomial(Rational(-1), 0, 0, 2, 0, Rational(0));
  return w;
}

ExactValue overlap_element_exact(const BasisTerm& a, const BasisTerm& b, const BasisSet& set) {
  StuPolynomial pa = StuPolynomial::from_basis_term(a, set.k);
  StuPolynomial pb = StuPolynomial::from_basis_term(b, set.k);
  return integrate_full_exact(product(product(pa, pb), weight_volume()));
}

ExactValue kinetic_element_exact(const BasisTerm& a, const BasisTerm& b, const BasisSet& set) {
  StuPolynomial pa = StuPolynomial::from_basis_term(a, set.k);
  StuPolynomial pb = StuPolynomial::from_basis_term(b, set.k);
  const StuPolynomial fa_s = differentiate(pa, Var::s), fa_u = differentiate(pa, Var::u),
                      fa_t = differentiate(pa, Var::t);
  const StuPolynomial fb_s = differentiate(pb, Var::s), fb_u = differentiate(pb, Var::u),
                      fb_t = differentiate(pb, Var::t);

  StuPolynomial grad = product(fa_s, fb_s);
  grad += product(fa_u, fb_u);
  grad += product(fa_t, fb_t);
  StuPolynomial integrand = product(grad, weight_volume());

  StuPolynomial cross_su = product(fa_s, fb_u);
  cross_su += product(fa_u, fb_s);
  integrand += product(cross_su, weight_cross_su());

  StuPolynomial cross_tu = product(fa_t, fb_u);
  cross_tu += product(fa_u, fb_t);
  integrand += product(cross_tu, weight_cross_tu());

  return integrate_full_exact(integrand);
}

ExactValue attraction_element_exact(const BasisTerm& a, const BasisTerm& b, const BasisSet& set) {
  StuPolynomial pa = StuPolynomial::from_basis_term(a, set.k);
  StuPolynomial pb = StuPolynomial::from_basis_term(b, set.k);
  StuPolynomial w =
      StuPolynomial::monomial(Rational(-4) * set.Z, 1, 1, 0, 0, Rational(0));
  return integrate_full_exact(product(product(pa, pb), w));
}

ExactValue repulsion_element_exact(const BasisTerm& a, const BasisTerm& b, const BasisSet& set) {
  StuPolynomial pa = StuPolynomial::from_basis_term(a, set.k);
  StuPolynomial pb = StuPolynomial::from_basis_term(b, set.k);
  StuPolynomial w = StuPolynomial::monomial(Rational(1), 2, 0, 0, 0, Rational(0));
  w += StuPolynomial::monomial(Rational(-1), 0, 0, 2, 0, Rational(0));
  return integrate_full_exact(product(product(pa, pb), w));
}

ExactValue hamiltonian_element_exact(const BasisTerm& a, const BasisTerm& b,
                                     const BasisSet& set) {
  ExactValue h = kinetic_element_exact(a, b, set);
  h += attraction_element_exact(a, b, set);
  h += repulsion_element_exact(a, b, set);
  return h;
}

Real overlap_element(const BasisTerm& a, const BasisTerm& b, const BasisSet& set,
                     const PrecisionContext& ctx) {
  return overlap_element_exact(a, b, set).realize(ctx);
}

Real hamiltonian_element(const BasisTerm& a, const BasisTerm& b, const BasisSet& set,
                         const PrecisionContext& ctx) {
  return hamiltonian_element_exact(a, b, set).realize(ctx);
}

Pencil assemble(const BasisSet& set, const PrecisionContext& ctx, AssemblyMode mode,
                int threads) {
  if (set.terms.empty()) throw std::invalid_argument("assemble: empty basis set");
  Pencil p;
  p.n = set.terms.size();
  p.S = PackedSymmetric(p.n);
  p.H = PackedSymmetric(p.n);
  p.meta = PencilMeta{set.omega, set.k, set.Z, ctx.digits(), set.fingerprint()};
  fill_rows(p, set, ctx, mode, threads, 0);
  return p;
}

void extend(Pencil& pencil, const BasisSet& set, const PrecisionContext& ctx, AssemblyMode mode,
            int threads) {
  const std::size_t old_n = pencil.n;
  if (set.terms.size() < old_n)
    throw std::invalid_argument("extend: target basis smaller than pencil");
  BasisSet prefix;
  prefix.omega = pencil.meta.omega;
  prefix.k = set.k;
  prefix.Z = set.Z;
  prefix.terms.assign(set.terms.begin(), set.terms.begin() + static_cast<std::ptrdiff_t>(old_n));
  if (prefix.fingerprint() != pencil.meta.fingerprint)
    throw std::invalid_argument("extend: pencil is not a canonical prefix of the target basis");

  pencil.n = set.terms.size();
  pencil.S.grow(pencil.n);
  pencil.H.grow(pencil.n);
  pencil.meta.omega = set.omega;
  pencil.meta.digits = ctx.digits();
  pencil.meta.fingerprint = set.fingerprint();
  fill_rows(pencil, set, ctx, mode, threads, old_n);
}

void realize(Pencil& pencil, const PrecisionContext& ctx) {
  if (!pencil.has_exact())
    throw SolverError("realize: pencil has no exact entries to realize from");
  const std::size_t count = pencil.S.packed_size();
  for (std::size_t idx = 0; idx < count; ++idx) {
    pencil.S.flat(idx) = pencil.S_exact[idx].realize(ctx);
    pencil.H.flat(idx) = pencil.H_exact[idx].realize(ctx);
  }
  pencil.meta.digits = ctx.digits();
}

void drop_index(Pencil& pencil, std::size_t index) {
  if (index >= pencil.n) throw std::out_of_range("drop_index: index out of range");
  const std::size_t n = pencil.n;
  const std::size_t m = n - 1;
  PackedSymmetric s2(m), h2(m);
  std::vector<ExactValue> se2, he2;
  const bool exact = pencil.has_exact();
  if (exact) {
    se2.resize(PackedSymmetric::packed_index(m, 0));
    he2.resize(PackedSymmetric::packed_index(m, 0));
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == index) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      if (j == index) continue;
      const std::size_t src = PackedSymmetric::packed_index(i, j);
      s2.flat(out) = pencil.S.flat(src);
      h2.flat(out) = pencil.H.flat(src);
      if (exact) {
        se2[out] = pencil.S_exact[src];
        he2[out] = pencil.H_exact[src];
      }
      ++out;
    }
  }
  pencil.n = m;
  pencil.S = std::move(s2);
  pencil.H = std::move(h2);
  pencil.S_exact = std::move(se2);
  pencil.H_exact = std::move(he2);
}

}  // namespace hyll
