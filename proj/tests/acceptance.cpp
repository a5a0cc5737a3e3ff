#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "contexts.hpp"
#include "ellbasis/ell_functions.hpp"
#include "ellbasis/params.hpp"
#include "ellbasis/psi_bridge.hpp"
#include "ellbasis/search.hpp"

using namespace ellbasis;
using namespace testing_util;

namespace {

struct Checker {
  long checks = 0, failures = 0;
  std::string first;
  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

FqVec ivec(const BaseField& K, std::initializer_list<int64_t> xs) {
  FqVec r;
  for (auto x : xs) r.push_back(K.from_int(x));
  return r;
}

FqPoly ipol(const BaseField& K, std::initializer_list<int64_t> xs) { return poly::make(K, ivec(K, xs)); }

FqVec unit(const BaseField& K, int d, int i) {
  FqVec v(d, K.zero());
  v[i] = K.one();
  return v;
}

Outcome from_checker(const Checker& c, const std::string& extra = "") {
  std::ostringstream os;
  os << "checks=" << c.checks << " failures=" << c.failures;
  if (!extra.empty()) os << " " << extra;
  if (c.failures) os << " first=\"" << c.first << "\"";
  return {c.failures == 0 && c.checks > 0, os.str()};
}

std::shared_ptr<const OmegaContext> example_omega() { return std::make_shared<const OmegaContext>(example_context()); }

ThetaContext example_theta() {
  auto om = example_omega();
  ThetaOptions o;
  o.R = FqPoint::affine(om->K->from_int(1), om->K->from_int(2));
  return build_theta_context(om, o);
}

// worked example: curve, quotient, isogeny, Pi and the u_{O,kt}
Outcome example_omega_check() {
  Checker ck;
  auto K = BaseField::prime(7);
  FqCurve E(K, K->from_int(1), K->from_int(3), K->from_int(5), K->from_int(3), K->from_int(2));
  FqPoint t = FqPoint::affine(K->from_int(3), K->from_int(1));
  ck(group_order(E) == 10, "#E = 10");
  ck(has_exact_order(E, t, 5), "t has order 5");
  Isogeny I = velu_isogeny(E, t);
  const auto& Ep = I.codomain;
  ck((std::vector<Fq>{Ep.a1(), Ep.a2(), Ep.a3(), Ep.a4(), Ep.a6()}) == ivec(*K, {1, 3, 5, 4, 6}), "E' coefficients");
  ck(I.x_num == ipol(*K, {6, 5, 2, 0, 0, 1}), "x-map numerator");
  ck(I.x_den == ipol(*K, {4, 0, 3, 0, 1}), "x-map denominator");
  OmegaOptions o;
  o.a = FqPoint::affine(K->from_int(4), K->from_int(2));
  OmegaContext c = build_omega_context(E, t, o);
  ck(c.Pi == ipol(*K, {4, 5, 4, 0, 3, 1}), "Pi");
  // u_{O,kt} = (y + s_k) / (x - nu_k): (y+2)/(x+4), (y+2)/(x+3), y/(x+3), (y+6)/(x+4)
  const int s_exp[5] = {0, 2, 2, 0, 6};
  const int den_exp[5] = {0, 4, 3, 3, 4};
  for (int k = 1; k < 5; ++k) {
    auto u = u_func(E, FqPoint::infinity(), E.mul(t, k));
    ck(u.n1 == ipol(*K, {1}), "u_{O,kt} y coefficient k=" + std::to_string(k));
    ck(u.n0 == ipol(*K, {s_exp[k]}), "u_{O,kt} constant k=" + std::to_string(k));
    ck(u.den == ipol(*K, {den_exp[k], 1}), "u_{O,kt} denominator k=" + std::to_string(k));
  }
  auto u0 = constant_function(*K, K->one());
  ck(eval_function(E, u0, FqPoint::affine(K->from_int(1), K->from_int(2))) == K->one(), "u_{O,O} = 1");
  return from_checker(ck);
}

Outcome example_theta_check() {
  Checker ck;
  ThetaContext tc = example_theta();
  const BaseField& K = tc.field();
  ck(tc.frak_c == K.from_int(3), "frak_c");
  ck(tc.frak_a == K.from_int(5), "frak_a");
  ck(tc.frak_b == K.zero(), "frak_b");
  ck(tc.iota == ivec(K, {0, 5, 5, 1, 0}), "iota");
  ck(tc.uR == ivec(K, {4, 1, 5, 1, 4}), "u_R");
  ck(tc.uR_inv == ivec(K, {2, 2, 0, 4, 0}), "u_R inverse");
  ck(tc.xR == ivec(K, {1, 5, 5, 1, 2}), "x_R");
  ThetaTrace tr;
  auto r = theta_multiply(tc, ivec(K, {6, 3, 6, 1, 2}), ivec(K, {2, 6, 6, 4, 2}), &tr);
  ck(tr.diff_prod == ivec(K, {0, 2, 0, 3, 5}), "difference product");
  ck(tr.iota_term == ivec(K, {6, 0, 4, 5, 5}), "iota term");
  ck(tr.eval_prod == ivec(K, {0, 4, 0, 3, 0}), "evaluation product");
  ck(tr.x_term == ivec(K, {1, 1, 0, 1, 4}), "x term");
  ck(tr.interp == ivec(K, {4, 5, 4, 0, 1}), "interpolation");
  ck(r == ivec(K, {3, 5, 1, 5, 6}), "product");
  ck(tr.convolutions == 5, "five convolutions");
  return from_checker(ck);
}

struct CountCell {
  uint64_t q;
  CurveModel m;
};

Outcome count_check() {
  Checker totals, frob, step;
  int cells = 0, skipped = 0, inv_ok = 0, share_ok = 0;
  std::string first_gap;
  Rng rng(3);
  const std::vector<CountCell> rows{{1009, CurveModel::General}, {1009, CurveModel::Short},
                                    {81, CurveModel::General},   {81, CurveModel::Char3Ordinary},
                                    {32, CurveModel::General},   {32, CurveModel::Char2Ordinary},
                                    {32, CurveModel::Char2Supersingular}};
  for (const auto& row : rows) {
    for (int d = 4; d <= 13; ++d) {
      SearchOptions so;
      so.model = row.m;
      so.seed = d;
      std::optional<OmegaContext> c;
      try {
        c = search_omega_context(BaseField::of_order(row.q), d, so);
      } catch (const Error&) {
        ++skipped;
        continue;
      }
      ++cells;
      const BaseField& K = *c->K;
      const bool h1 = !K.is_zero(c->E.a1()), h3 = !K.is_zero(c->E.a3());
      std::ostringstream tag;
      tag << "q=" << row.q << " d=" << d << " " << model_name(row.m);
      auto models = applicable_models(c->E);
      totals(std::find(models.begin(), models.end(), row.m) != models.end(), tag.str() + " model pattern");
      FqVec a = random_vec(K, d, rng), b = random_vec(K, d, rng);
      OpCounts n;
      omega_multiply(*c, a, b, &n);
      OpCounts cf = closed_form_counts(row.m, d);
      bool exact = n.adds == cf.adds && n.mults == cf.mults && n.invs == cf.invs;
      if (!exact && first_gap.empty()) {
        std::ostringstream os;
        os << tag.str() << " adds " << n.adds << " vs " << cf.adds << ", mults " << n.mults << " vs " << cf.mults
           << ", invs " << n.invs << " vs " << cf.invs;
        first_gap = os.str();
      }
      totals(exact, tag.str());
      inv_ok += n.invs == cf.invs;
      share_ok += n.a1_adds == cf.a1_adds && n.a1_mults == cf.a1_mults && n.a3_adds == cf.a3_adds;
      step(n == multiply_step_counts(d, h1, h3), tag.str() + " step tally");
      OpCounts f, fi;
      omega_frobenius(*c, a, &f);
      omega_frobenius_inverse(*c, a, &fi);
      OpCounts ff = frobenius_closed_form(d, h1);
      frob(f.mults == ff.mults && f.adds == ff.adds, tag.str() + " frobenius");
      frob(fi.mults == ff.mults && fi.adds == ff.adds, tag.str() + " inverse frobenius");
    }
  }
  std::ostringstream os;
  os << "cells=" << cells << " not_constructible=" << skipped << " multiply_totals_exact="
     << (cells - totals.failures) << "/" << cells << " invs_exact=" << inv_ok << "/" << cells
     << " a1_a3_shares_exact=" << share_ok << "/" << cells << " step_tally_exact=" << (step.checks - step.failures)
     << "/" << step.checks << " frobenius_exact=" << (frob.checks - frob.failures) << "/" << frob.checks;
  if (!first_gap.empty()) os << " first_gap=\"" << first_gap << "\"";
  if (frob.failures) os << " first_frobenius_failure=\"" << frob.first << "\"";
  return {totals.failures == 0 && frob.failures == 0 && cells > 0, os.str()};
}

Outcome oracle_check() {
  Checker ck;
  Rng rng(21);
  int contexts = 0;
  std::vector<uint64_t> chars;
  for (const auto& om : oracle_contexts()) {
    const BaseField& K = *om->K;
    const ExtField& L = *om->L;
    const int d = om->d;
    ++contexts;
    chars.push_back(K.p());
    std::string tag = "q=" + std::to_string(K.q()) + " d=" + std::to_string(d);
    ThetaOptions to;
    to.seed = d;
    ThetaContext tc = build_theta_context(om, to);
    std::optional<PsiContext> pc;
    if (d % 2 == 1) {
      try {
        pc = build_psi_context(om);
      } catch (const Error& e) {
        if (e.code() != Errc::TwoTorsionObstruction) throw;
      }
    }
    const PsiContext* pp = pc ? &*pc : nullptr;
    const FqVec one_w = unit(K, d, 0), one_t(d, K.one());
    for (int i = 0; i < 200; ++i) {
      FqVec a = random_vec(K, d, rng), b = random_vec(K, d, rng);
      auto ea = omega_to_element(*om, a), eb = omega_to_element(*om, b);
      ck(element_to_omega(*om, ea) == a, tag + " omega coordinates");
      ck(omega_to_element(*om, omega_multiply(*om, a, b)) == L.mul(ea, eb), tag + " omega multiply");
      ck(omega_to_element(*om, omega_frobenius(*om, a)) == L.frobenius(ea), tag + " omega frobenius");
      ck(omega_to_element(*om, omega_frobenius_inverse(*om, a)) == L.frobenius(ea, d - 1),
         tag + " omega inverse frobenius");
      FqVec ta = omega_to_theta(tc, a), tb = omega_to_theta(tc, b);
      ck(theta_to_element(tc, ta) == ea, tag + " omega to theta");
      ck(theta_to_omega(tc, ta) == a, tag + " theta to omega");
      ck(element_to_theta(tc, eb) == tb, tag + " theta coordinates");
      ck(theta_to_element(tc, theta_multiply(tc, ta, tb)) == L.mul(ea, eb), tag + " theta multiply");
      ck(theta_to_element(tc, theta_frobenius(tc, ta, 1)) == L.frobenius(ea), tag + " theta frobenius");
      ck(theta_to_element(tc, theta_frobenius(tc, ta, -1)) == L.frobenius(ea, d - 1), tag + " theta inverse frobenius");
      FqVec pa = omega_to_psi(*om, pp, a);
      ck(pa == ea.c, tag + " omega to psi");
      ck(psi_to_omega(*om, pp, pa) == a, tag + " psi to omega");
      ck(generic_convert(*om, pa, Basis::Psi, Basis::Omega) == a, tag + " psi to omega matrix");
      if (L.is_zero(ea)) continue;
      ExtElement inv = L.inv(ea);
      ck(omega_to_element(*om, invert_omega(*om, pp, a)) == inv, tag + " omega inverse");
      ck(theta_to_element(tc, invert_theta(tc, pp, ta)) == inv, tag + " theta inverse via psi");
      ck(theta_to_element(tc, lagrange_invert(tc, ta)) == inv, tag + " theta inverse by lagrange");
    }
  }
  std::sort(chars.begin(), chars.end());
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
  bool c2 = std::count(chars.begin(), chars.end(), 2), c3 = std::count(chars.begin(), chars.end(), 3);
  bool big = chars.back() > 3;
  ck(contexts >= 10, "at least 10 contexts");
  ck(c2 && c3 && big, "characteristics 2, 3 and > 3");
  return from_checker(ck, "contexts=" + std::to_string(contexts));
}

Outcome identity_check() {
  Checker ck;
  Rng rng(31);
  int curves = 0;
  for (uint64_t q : {1009ull, 81ull, 32ull}) {
    auto K = BaseField::of_order(q);
    for (int c = 0; c < 5; ++c) {
      std::optional<FqCurve> Eo;
      while (!Eo) {
        try {
          Eo.emplace(K, K->random(rng), K->random(rng), K->random(rng), K->random(rng), K->random(rng));
        } catch (const Error&) {
        }
      }
      const FqCurve& E = *Eo;
      ++curves;
      const Fq a1 = E.a1(), a2 = E.a2();
      std::string tag = "q=" + std::to_string(q) + " curve " + std::to_string(c);
      int done = 0;
      while (done < 100) {
        FqPoint A = E.random_point(rng), B = E.random_point(rng), C = E.random_point(rng);
        if (done % 3 == 0) A = FqPoint::infinity();
        if (done % 7 == 1) C = E.neg(B);
        if (A == B || B == C || A == C) continue;
        FqPoint P = E.random_point(rng);
        if (P == A || P == B || P == C) continue;
        ++done;
        Fq g = *gamma(E, A, B, C);
        // moins
        ck(*gamma(E, E.neg(A), E.neg(B), E.neg(C)) == K->sub(K->neg(g), a1), tag + " moins");
        // translation invariance
        FqPoint T = E.random_point(rng);
        ck(*gamma(E, E.add(A, T), E.add(B, T), E.add(C, T)) == g, tag + " translation");
        // the 12 images under permutations and negation
        const FqPoint X[3] = {A, B, C};
        const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        for (int pi = 0; pi < 6; ++pi) {
          for (int s : {1, -1}) {
            FqPoint Y[3];
            for (int i = 0; i < 3; ++i) Y[i] = s == 1 ? X[perms[pi][i]] : E.neg(X[perms[pi][i]]);
            bool even = (pi < 3) == (s == 1);
            ck(*gamma(E, Y[0], Y[1], Y[2]) == (even ? g : K->sub(K->neg(g), a1)), tag + " Gamma symmetry");
          }
        }
        auto uAB = u_func(E, A, B), uBC = u_func(E, B, C), uCA = u_func(E, C, A), uAC = u_func(E, A, C);
        // sym
        ck(eval_function(E, uBC, A) == g, tag + " sym u_{B,C}(A)");
        ck(eval_function(E, uCA, B) == g, tag + " sym u_{C,A}(B)");
        ck(eval_function(E, uAB, C) == g, tag + " sym u_{A,B}(C)");
        Fq vAB = eval_function(E, uAB, P), vBC = eval_function(E, uBC, P), vCA = eval_function(E, uCA, P);
        Fq vAC = eval_function(E, uAC, P);
        // somme
        ck(K->add(K->add(vAB, vBC), vCA) == K->sub(g, a1), tag + " somme");
        // prod
        Fq gACB = *gamma(E, A, C, B);
        Fq xA = x_translate(E, A, P), xB = x_translate(E, B, P);
        Fq xAB = x_translate(E, A, B), xAC = x_translate(E, A, C);
        Fq rhs = K->add(xA, K->add(K->mul(g, vAC), K->mul(gACB, vAB)));
        rhs = K->add(rhs, K->add(a2, K->add(xAB, xAC)));
        ck(K->mul(vAB, vAC) == rhs, tag + " prod");
        // carre
        Fq sq = K->add(K->sub(K->add(xA, xB), K->mul(a1, vAB)), K->add(xAB, a2));
        ck(K->mul(vAB, vAB) == sq, tag + " carre");
      }
    }
  }
  return from_checker(ck, "curves=" + std::to_string(curves));
}

Outcome dq_check() {
  Checker ck;
  ck(compute_dq(654323, 14).dq == 56, "d_q(654323, 14) = 56");
  for (uint64_t q = 2; q <= 64; ++q) {
    if (!prime_power(q)) continue;
    bool sqf = true;
    for (auto [p, e] : factor(q - 1)) sqf = sqf && e == 1;
    for (int d = 2; d <= 30; ++d) {
      std::string tag = "q=" + std::to_string(q) + " d=" + std::to_string(d);
      auto p = compute_dq(q, d);
      if (std::gcd(static_cast<uint64_t>(d), q - 1) == 1) ck(p.dq == static_cast<uint64_t>(d), tag + " d prime to q-1");
      ck(p.dq <= static_cast<uint64_t>(d) * d * (q - 1) * (q - 1), tag + " d_q <= d^2 (q-1)^2");
      if (sqf) ck(p.dq <= static_cast<uint64_t>(d) * d * d, tag + " d_q <= d^3");
      uint64_t dphi = static_cast<uint64_t>(d) * euler_phi(d);
      for (int f = 2; f <= 9; ++f) {
        if (std::gcd(static_cast<uint64_t>(f), dphi) != 1) continue;
        if (std::log2(static_cast<double>(q)) * f > 62) break;
        ck(compute_dq(ipow(q, f), d).dq == p.dq, tag + " d_{q^f} = d_q");
      }
    }
  }
  for (uint64_t q : {2ull, 3ull, 5ull}) {
    for (int d = 2; d <= 200; ++d) {
      std::string tag = "base change q=" + std::to_string(q) + " d=" + std::to_string(d);
      auto plan = find_base_change(q, d);
      uint64_t dphi = static_cast<uint64_t>(d) * euler_phi(d);
      ck(std::gcd(static_cast<uint64_t>(plan.f), dphi) == 1, tag + " gcd(f, d phi(d)) = 1");
      ck(le_sqrt_power(plan.dq, q, plan.f), tag + " d_q <= q^{f/2}");
      ck(plan.f <= default_base_change_cap(d), tag + " f under the cap");
      ck((static_cast<uint64_t>(plan.f) * plan.F) % d == 1 % static_cast<uint64_t>(d), tag + " F f = 1 mod d");
    }
  }
  return from_checker(ck);
}

Outcome fast_conversion_check() {
  Checker ck;
  Rng rng(41);
  int degrees = 0;
  for (int d = 3; d <= 31; d += 2) {
    Cell cell{d % 4 == 1 ? 4001u : 1009u, d, CurveModel::General};
    auto om = std::make_shared<const OmegaContext>(cell_context(cell, true));
    const BaseField& K = *om->K;
    PsiContext pc = build_psi_context(om);
    ++degrees;
    std::string tag = "d=" + std::to_string(d);
    for (int i = 0; i < 500; ++i) {
      FqVec a = random_vec(K, d, rng), v = random_vec(K, d, rng);
      FqVec w = omega_to_psi_fast(pc, a);
      ck(w == generic_convert(*om, a, Basis::Omega, Basis::Psi), tag + " omega to psi");
      ck(psi_to_omega_fast(pc, v) == generic_convert(*om, v, Basis::Psi, Basis::Omega), tag + " psi to omega");
    }
    for (int i = 0; i < 50; ++i) {
      FqVec a = random_vec(K, d, rng), b = random_nonzero_vec(K, d, rng);
      FqVec q = omega_multiply(*om, a, invert_omega(*om, &pc, b));
      ck(omega_multiply(*om, q, b) == a, tag + " (a / b) b = a");
    }
  }
  return from_checker(ck, "degrees=" + std::to_string(degrees));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 1.0, example_omega_check}, {2, 1.0, example_theta_check},   {3, 30.0, count_check},
      {4, 60.0, oracle_check},       {5, 0.0, identity_check},        {6, 10.0, dq_check},
      {7, 0.0, fast_conversion_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, std::string("error ") + errc_name(e.code()) + ": " + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.limit_s == 0 || s < c.limit_s;
    bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("criterion %d: %s time=%.2fs%s %s\n", c.id, pass ? "PASS" : "FAIL", s,
                c.limit_s > 0 ? (in_time ? "" : " over_limit") : "", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("criterion 8: DECLARED not reproducible at desk scale; asymptotic runtimes and constants are covered by "
              "criteria 3-7\n");
  std::printf("acceptance: %d of 7 criteria failed\n", failed);
  return failed ? 1 : 0;
}
