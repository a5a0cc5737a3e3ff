#include "ellbasis/bundle.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "ellbasis/ell_functions.hpp"
#include "ellbasis/search.hpp"

namespace ellbasis {

using io::json;

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(Errc::FormatError, std::string("missing field ") + key);
  return j.at(key);
}

// stored index k = 1..n maps to array slot k - 1
json tail_to_json(const BaseField& K, const FqVec& v, int from, int to) {
  json r = json::array();
  for (int k = from; k <= to; ++k) r.push_back(io::fq_to_json(K, v[k]));
  return r;
}

FqVec tail_from_json(const BaseField& K, const json& j, int from, int to, int size) {
  FqVec parsed = io::vec_from_json(K, j);
  if (static_cast<int>(parsed.size()) != to - from + 1) raise(Errc::FormatError, "table has the wrong length");
  FqVec v(size, K.zero());
  for (int k = from; k <= to; ++k) v[k] = parsed[k - from];
  return v;
}

FqVec exact_vec(const BaseField& K, const json& j, int d) {
  FqVec v = io::vec_from_json(K, j);
  if (static_cast<int>(v.size()) != d) raise(Errc::FormatError, "vector must have d entries");
  return v;
}

FqPoint parse_point(const BaseField& K, const std::string& csv) {
  FqVec v = io::vec_from_csv(K, csv);
  if (v.size() != 2) raise(Errc::FormatError, "a point is x,y");
  return FqPoint::affine(v[0], v[1]);
}

void attach_theta_psi(Bundle& b, const std::optional<FqPoint>& R) {
  ThetaOptions to;
  to.seed = b.seed;
  to.R = R;
  try {
    b.theta = std::make_shared<const ThetaContext>(build_theta_context(b.omega, to));
  } catch (const Error& e) {
    if (R) throw;
    b.notes.push_back(std::string("theta basis unavailable: ") + e.name());
  }
  if (b.omega->d % 2 == 1) {
    try {
      b.psi = std::make_shared<const PsiContext>(build_psi_context(b.omega));
    } catch (const Error& e) {
      b.notes.push_back(std::string("fast psi bridge unavailable: ") + e.name());
    }
  } else {
    b.notes.push_back("even d: psi conversions use the matrix path");
  }
}

}  // namespace

Bundle construct_bundle(const ConstructOptions& opt) {
  if (opt.d < 2) raise(Errc::InvalidArgument, "d must be at least 2");
  Bundle b;
  b.q = opt.q;
  b.seed = opt.seed;
  BaseFieldPtr K = BaseField::of_order(opt.q);
  b.existence = existence_check(opt.q, opt.d);
  std::optional<FqPoint> R;
  if (opt.curve) {
    FqVec c = io::vec_from_csv(*K, *opt.curve);
    if (c.size() != 5) raise(Errc::FormatError, "curve is a1,a2,a3,a4,a6");
    FqCurve E(K, c[0], c[1], c[2], c[3], c[4]);
    FqPoint t;
    if (opt.t) {
      t = parse_point(*K, *opt.t);
      E.check(t);
      if (!has_exact_order(E, t, static_cast<uint64_t>(opt.d))) raise(Errc::InvalidArgument, "t does not have order d");
    } else {
      Rng rng(opt.seed);
      t = find_point_of_order(E, static_cast<uint64_t>(opt.d), rng);
    }
    OmegaOptions oo;
    oo.seed = opt.seed;
    if (opt.a) oo.a = parse_point(*K, *opt.a);
    b.omega = std::make_shared<const OmegaContext>(build_omega_context(E, t, oo));
    if (opt.R) {
      R = parse_point(*K, *opt.R);
      E.check(*R);
    }
  } else {
    if (opt.t || opt.a || opt.R) raise(Errc::InvalidArgument, "--t, --a and --R need --curve");
    SearchOptions so;
    so.seed = opt.seed;
    so.need_psi = opt.d % 2 == 1;
    try {
      b.omega = std::make_shared<const OmegaContext>(search_omega_context(K, opt.d, so));
    } catch (const Error& e) {
      if (e.code() != Errc::SearchCapExceeded) throw;
      so.need_psi = false;
      try {
        b.omega = std::make_shared<const OmegaContext>(search_omega_context(K, opt.d, so));
      } catch (const Error& e2) {
        if (e2.code() != Errc::SearchCapExceeded || !opt.allow_base_change) throw;
      }
    }
    if (!b.omega) {
      BaseChangePlan plan = find_base_change(opt.q, opt.d);
      if (plan.f == 1) raise(Errc::SearchCapExceeded, "no curve found over F_q");
      if (plan.Q == 0) raise(Errc::BoundExceeded, "Q = q^f exceeds 64 bits");
      so.need_psi = opt.d % 2 == 1;
      BaseFieldPtr KQ = BaseField::of_order(plan.Q);
      try {
        b.omega = std::make_shared<const OmegaContext>(search_omega_context(KQ, opt.d, so));
      } catch (const Error& e) {
        if (e.code() != Errc::SearchCapExceeded) throw;
        so.need_psi = false;
        b.omega = std::make_shared<const OmegaContext>(search_omega_context(KQ, opt.d, so));
      }
      b.base_change = plan;
      b.notes.push_back("base change to F_Q applied");
    }
  }
  attach_theta_psi(b, R);
  return b;
}

json omega_to_json(const OmegaContext& c) {
  const BaseField& K = *c.K;
  const int d = c.d;
  json j;
  j["d"] = d;
  j["field"] = io::field_to_json(K);
  j["curve"] = io::curve_to_json(c.E);
  j["t"] = io::point_to_json(K, c.t);
  j["a"] = io::point_to_json(K, c.a);
  j["Eprime"] = io::curve_to_json(c.Ep);
  j["isogeny"] = io::isogeny_to_json(c.iso);
  j["Pi"] = io::poly_to_json(K, c.Pi);
  j["y_b"] = io::ext_to_json(*c.L, c.y_b);
  j["nu"] = tail_to_json(K, c.nu, 1, d - 1);
  j["rho"] = tail_to_json(K, c.rho, 1, d - 1);
  j["kappa"] = io::vec_to_json(K, c.kappa);
  j["phi_xi0_first"] = io::vec_to_json(K, c.phi_xi0_first);
  j["gamma_row"] = tail_to_json(K, c.gamma_last_row, 1, d - 2);
  j["gamma_col"] = tail_to_json(K, c.gamma_last_col, 1, d - 2);
  j["gamma_exc"] = c.gamma_exc ? io::fq_to_json(K, *c.gamma_exc) : json(nullptr);
  return j;
}

json theta_to_json(const ThetaContext& t) {
  const BaseField& K = t.field();
  json j;
  j["R"] = io::point_to_json(K, t.R);
  j["frak_c"] = io::fq_to_json(K, t.frak_c);
  j["frak_a"] = io::fq_to_json(K, t.frak_a);
  j["frak_b"] = io::fq_to_json(K, t.frak_b);
  j["lambda"] = io::vec_to_json(K, t.lambda);
  j["iota"] = io::vec_to_json(K, t.iota);
  j["uR"] = io::vec_to_json(K, t.uR);
  j["uRinv"] = io::vec_to_json(K, t.uR_inv);
  j["xR"] = io::vec_to_json(K, t.xR);
  j["convolution"] = t.conv->name();
  return j;
}

json psi_to_json(const PsiContext& p) {
  const BaseField& K = p.field();
  json j;
  j["Y1"] = io::poly_to_json(K, p.Y1);
  j["Y0"] = io::poly_to_json(K, p.Y0);
  j["M"] = io::poly_to_json(K, p.M);
  j["D"] = io::poly_to_json(K, p.D);
  j["s"] = tail_to_json(K, p.s, 1, p.d() - 1);
  j["Dk_at_nuk"] = tail_to_json(K, p.Dk_at_nuk, 1, p.half());
  return j;
}

json plan_to_json(const BaseChangePlan& p) {
  return {{"q", std::to_string(p.q)}, {"d", p.d}, {"f", p.f}, {"F", p.F}, {"Q", p.Q_decimal}};
}

json dq_to_json(const DqProfile& p, const Existence& e) {
  json primes = json::array();
  for (const auto& v : p.primes)
    primes.push_back({{"ell", std::to_string(v.ell)}, {"v_d", v.v_d}, {"v_q_minus_1", v.v_qm1}, {"v_dq", v.v_dq}});
  return {{"q", std::to_string(p.q)},
          {"d", p.d},
          {"dq", std::to_string(p.dq)},
          {"primes", primes},
          {"omega_guaranteed", e.omega_guaranteed},
          {"theta_guaranteed", e.theta_guaranteed}};
}

json bundle_to_json(const Bundle& b) {
  json j;
  j["format"] = "ellbasis-bundle";
  j["version"] = kBundleVersion;
  j["q"] = std::to_string(b.q);
  j["d"] = b.omega->d;
  j["seed"] = std::to_string(b.seed);
  j["existence"] = {{"dq", std::to_string(b.existence.dq)},
                    {"omega_guaranteed", b.existence.omega_guaranteed},
                    {"theta_guaranteed", b.existence.theta_guaranteed}};
  j["base_change"] = b.base_change ? plan_to_json(*b.base_change) : json(nullptr);
  j["omega"] = omega_to_json(*b.omega);
  j["theta"] = b.theta ? theta_to_json(*b.theta) : json(nullptr);
  j["psi"] = b.psi ? psi_to_json(*b.psi) : json(nullptr);
  j["notes"] = b.notes;
  return j;
}

Bundle bundle_from_json(const json& j) {
  try {
    if (member(j, "format") != "ellbasis-bundle") raise(Errc::FormatError, "not an ellbasis bundle");
    const json& ver = member(j, "version");
    if (!ver.is_number_integer() || ver.get<int>() != kBundleVersion)
      raise(Errc::FormatError, "unsupported bundle version");
    Bundle b;
    b.source = j;
    b.q = io::parse_u64(member(j, "q").get<std::string>());
    b.seed = io::parse_u64(member(j, "seed").get<std::string>());
    const json& ex = member(j, "existence");
    b.existence.dq = io::parse_u64(member(ex, "dq").get<std::string>());
    b.existence.omega_guaranteed = member(ex, "omega_guaranteed").get<bool>();
    b.existence.theta_guaranteed = member(ex, "theta_guaranteed").get<bool>();
    const json& bc = member(j, "base_change");
    if (!bc.is_null()) {
      BaseChangePlan p;
      p.q = io::parse_u64(member(bc, "q").get<std::string>());
      p.d = member(bc, "d").get<int>();
      p.f = member(bc, "f").get<int>();
      p.F = member(bc, "F").get<int>();
      p.Q_decimal = member(bc, "Q").get<std::string>();
      p.Q = io::parse_u64(p.Q_decimal);
      p.dq = b.existence.dq;
      b.base_change = p;
    }
    for (const auto& n : member(j, "notes")) b.notes.push_back(n.get<std::string>());

    const json& oj = member(j, "omega");
    BaseFieldPtr K = io::field_from_json(member(oj, "field"));
    const int d = member(oj, "d").get<int>();
    if (d < 2 || member(j, "d").get<int>() != d) raise(Errc::FormatError, "inconsistent d");
    FqCurve E = io::curve_from_json(K, member(oj, "curve"));
    FqPoint t = io::point_from_json(*K, member(oj, "t"));
    FqPoint a = io::point_from_json(*K, member(oj, "a"));
    FqPoly Pi = io::poly_from_json(*K, member(oj, "Pi"));
    if (Pi.degree() != d || Pi.c.back() != K->one()) raise(Errc::FormatError, "Pi must be monic of degree d");
    ExtElement yb{exact_vec(*K, member(oj, "y_b"), d)};
    OmegaContext c = rebuild_omega_context(E, t, a, Pi, yb);
    if (c.d != d) raise(Errc::FormatError, "order of t differs from d");
    c.nu = tail_from_json(*K, member(oj, "nu"), 1, d - 1, d);
    c.rho = tail_from_json(*K, member(oj, "rho"), 1, d - 1, d);
    c.kappa = exact_vec(*K, member(oj, "kappa"), d);
    c.kappa_sum = K->zero();
    for (int l = 1; l < d; ++l) c.kappa_sum = K->add(c.kappa_sum, c.kappa[l]);
    c.phi_xi0_first = exact_vec(*K, member(oj, "phi_xi0_first"), d);
    c.gamma_last_row = tail_from_json(*K, member(oj, "gamma_row"), 1, d - 2, d);
    c.gamma_last_col = tail_from_json(*K, member(oj, "gamma_col"), 1, d - 2, d);
    const json& ge = member(oj, "gamma_exc");
    if (ge.is_null() != (d % 3 != 0)) raise(Errc::FormatError, "gamma_exc must be present exactly when 3 | d");
    c.gamma_exc.reset();
    if (!ge.is_null()) c.gamma_exc = io::fq_from_json(*K, ge);
    b.omega = std::make_shared<const OmegaContext>(std::move(c));

    const json& tj = member(j, "theta");
    if (!tj.is_null()) {
      ThetaContext tc;
      tc.parent = b.omega;
      tc.R = io::point_from_json(*K, member(tj, "R"));
      tc.frak_c = io::fq_from_json(*K, member(tj, "frak_c"));
      tc.frak_a = io::fq_from_json(*K, member(tj, "frak_a"));
      tc.frak_b = io::fq_from_json(*K, member(tj, "frak_b"));
      tc.lambda = exact_vec(*K, member(tj, "lambda"), d);
      tc.gamma_succ.assign(d, K->zero());
      for (int k = 1; k <= d - 2; ++k) tc.gamma_succ[k] = K->sub(tc.lambda[k], tc.lambda[k - 1]);
      tc.iota = exact_vec(*K, member(tj, "iota"), d);
      tc.uR = exact_vec(*K, member(tj, "uR"), d);
      tc.uR_inv = exact_vec(*K, member(tj, "uRinv"), d);
      tc.xR = exact_vec(*K, member(tj, "xR"), d);
      tc.conv = make_convolution(member(tj, "convolution").get<std::string>());
      b.theta = std::make_shared<const ThetaContext>(std::move(tc));
    }
    const json& pj = member(j, "psi");
    if (!pj.is_null()) {
      PsiContext pc = rebuild_psi_context(b.omega, io::poly_from_json(*K, member(pj, "Y1")),
                                          io::poly_from_json(*K, member(pj, "Y0")));
      pc.M = io::poly_from_json(*K, member(pj, "M"));
      pc.D = io::poly_from_json(*K, member(pj, "D"));
      pc.s = tail_from_json(*K, member(pj, "s"), 1, d - 1, d);
      pc.Dk_at_nuk = tail_from_json(*K, member(pj, "Dk_at_nuk"), 1, pc.half(), pc.half() + 1);
      pc.D_inv = poly::invmod(*K, pc.D, Pi);
      b.psi = std::make_shared<const PsiContext>(std::move(pc));
    }
    return b;
  } catch (const json::exception& e) {
    raise(Errc::FormatError, std::string("malformed bundle: ") + e.what());
  }
}

void save_bundle(const Bundle& b, const std::string& path) {
  std::ofstream os(path);
  if (!os) raise(Errc::InvalidArgument, "cannot write " + path);
  os << bundle_to_json(b).dump(2) << '\n';
  if (!os) raise(Errc::InvalidArgument, "cannot write " + path);
}

Bundle load_bundle(const std::string& path) {
  std::ifstream is(path);
  if (!is) raise(Errc::InvalidArgument, "cannot read " + path);
  json j;
  try {
    j = json::parse(is);
  } catch (const json::exception& e) {
    raise(Errc::FormatError, std::string("malformed JSON: ") + e.what());
  }
  return bundle_from_json(j);
}

namespace {

class Group {
 public:
  explicit Group(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r_.total;
    if (ok) ++r_.passed;
    else if (r_.first_failure.empty()) r_.first_failure = what;
  }
  // exceptions count as failures
  void run(const std::string& what, const std::function<bool()>& fn) {
    bool ok = false;
    std::string msg = what;
    try {
      ok = fn();
    } catch (const Error& e) {
      msg = what + " (" + e.name() + ": " + e.what() + ")";
    }
    check(ok, msg);
  }
  GroupResult result() const { return r_; }

 private:
  GroupResult r_;
};

FqVec unit(const BaseField& K, int d, int i) {
  FqVec v(d, K.zero());
  v[i] = K.one();
  return v;
}

FqVec random_vec(const BaseField& K, int d, Rng& rng) {
  FqVec v(d);
  for (auto& x : v) x = K.random(rng);
  return v;
}

FqVec random_nonzero(const BaseField& K, int d, Rng& rng) {
  for (;;) {
    FqVec v = random_vec(K, d, rng);
    for (auto x : v)
      if (!K.is_zero(x)) return v;
  }
}

FqVec frob_power(const OmegaContext& c, FqVec a, int times) {
  for (int i = 0; i < times; ++i) a = omega_frobenius(c, a);
  return a;
}

}  // namespace

std::vector<GroupResult> verify_bundle(const Bundle& b, int trials, uint64_t seed) {
  const OmegaContext& c = *b.omega;
  const BaseField& K = *c.K;
  const ExtField& L = *c.L;
  const int d = c.d;
  std::vector<GroupResult> out;
  Rng rng(seed);

  Group st("structural");
  st.run("Pi monic irreducible of degree d",
         [&] { return c.Pi.degree() == d && c.Pi.c.back() == K.one() && is_irreducible(K, c.Pi); });
  st.run("t has exact order d", [&] { return has_exact_order(c.E, c.t, static_cast<uint64_t>(d)); });
  Isogeny iso = velu_isogeny(c.E, c.t);
  st.run("a lies on E'", [&] {
    iso.codomain.check(c.a);
    return true;
  });
  st.run("Pi divides x-map numerator minus x(a) times denominator", [&] {
    FqPoly num = poly::sub(K, iso.x_num, poly::scale(K, iso.x_den, c.a.x));
    return poly::rem(K, num, c.Pi).is_zero();
  });
  auto EL = base_change(c.E, c.L);
  LPoint bL = LPoint::affine(L.gen(), c.y_b);
  st.run("b lies on E(L)", [&] {
    EL.check(bL);
    return true;
  });
  st.run("Frobenius moves b by t", [&] {
    return LPoint::affine(L.frobenius(bL.x), L.frobenius(bL.y)) == EL.add(bL, lift_point(L, c.t));
  });
  st.run("d b is not O", [&] { return !EL.mul(bL, d).inf; });
  if (b.source) {
    const json& oj = (*b.source)["omega"];
    st.check(oj["Eprime"] == io::curve_to_json(iso.codomain), "stored E' equals the quotient curve");
    st.check(oj["isogeny"] == io::isogeny_to_json(iso), "stored isogeny equals the recomputed one");
  }
  if (b.theta) {
    st.run("R lies on E with d R != O", [&] {
      c.E.check(b.theta->R);
      return !c.E.mul(b.theta->R, d).inf;
    });
  }
  if (b.psi) st.check(d % 2 == 1, "psi section only for odd d");
  out.push_back(st.result());
  if (trials <= 0) return out;

  Group tb("tables");
  OmegaContext fresh = rebuild_omega_context(c.E, c.t, c.a, c.Pi, c.y_b);
  tb.check(fresh.nu == c.nu, "nu");
  tb.check(fresh.rho == c.rho, "rho");
  tb.check(fresh.kappa == c.kappa, "kappa");
  tb.check(fresh.phi_xi0_first == c.phi_xi0_first, "phi_xi0_first");
  tb.check(fresh.gamma_last_row == c.gamma_last_row, "gamma_row");
  tb.check(fresh.gamma_last_col == c.gamma_last_col, "gamma_col");
  tb.check(fresh.gamma_exc == c.gamma_exc, "gamma_exc");
  if (b.theta) {
    const ThetaContext& t = *b.theta;
    tb.run("theta tables", [&] {
      ThetaOptions to;
      to.R = t.R;
      to.convolution = t.conv->name();
      ThetaContext ft = build_theta_context(std::make_shared<const OmegaContext>(fresh), to);
      return ft.frak_c == t.frak_c && ft.frak_a == t.frak_a && ft.frak_b == t.frak_b && ft.lambda == t.lambda &&
             ft.iota == t.iota && ft.uR == t.uR && ft.uR_inv == t.uR_inv && ft.xR == t.xR;
    });
  }
  if (b.psi) {
    const PsiContext& p = *b.psi;
    tb.run("psi tables", [&] {
      PsiContext fp = rebuild_psi_context(std::make_shared<const OmegaContext>(fresh), p.Y1, p.Y0);
      return fp.M == p.M && fp.D == p.D && fp.s == p.s && fp.Dk_at_nuk == p.Dk_at_nuk;
    });
  }
  out.push_back(tb.result());

  Group rd("reduction");
  rd.run("kappa are the Omega coordinates of x(b)", [&] { return omega_to_element(c, c.kappa) == L.gen(); });
  {
    ExtElement xi = L.gen();
    FqVec v = c.kappa;
    for (int k = 0; k < d; ++k) {
      rd.run("Phi^-k(xi_0) " + std::to_string(k), [&] { return omega_to_element(c, v) == xi && v[0] == c.phi_xi0_first[k]; });
      v = omega_frobenius_inverse(c, v);
      xi = L.frobenius(xi, d - 1);
    }
  }
  if (b.theta) {
    const ThetaContext& t = *b.theta;
    rd.run("iota are the Theta coordinates of x(b)", [&] { return theta_to_element(t, t.iota) == L.gen(); });
    for (int i = 0; i < trials; ++i) {
      FqVec a = random_vec(K, d, rng);
      rd.run("sum alpha_i xi_i", [&] {
        ExtElement s = L.zero(), xi = L.gen();
        for (int j = 0; j < d; ++j) {
          s = L.add(s, L.mul(L.lift(a[j]), xi));
          xi = L.frobenius(xi, d - 1);
        }
        return theta_to_element(t, reduce_xi_combination(t, a)) == s;
      });
    }
  }
  out.push_back(rd.result());

  Group om("omega");
  om.run("identity", [&] { return omega_to_element(c, unit(K, d, 0)) == L.one(); });
  const OpCounts expect = multiply_step_counts(d, !K.is_zero(c.E.a1()), !K.is_zero(c.E.a3()));
  for (int i = 0; i < trials; ++i) {
    FqVec a = random_vec(K, d, rng), bb = random_vec(K, d, rng);
    ExtElement ea = omega_to_element(c, a), eb = omega_to_element(c, bb);
    om.run("multiply", [&] {
      OpCounts cnt;
      FqVec r = omega_multiply(c, a, bb, &cnt);
      return omega_to_element(c, r) == L.mul(ea, eb) && (c.cache_gamma || cnt == expect);
    });
    om.run("frobenius", [&] { return omega_to_element(c, omega_frobenius(c, a)) == L.frobenius(ea); });
    om.run("frobenius inverse", [&] { return omega_to_element(c, omega_frobenius_inverse(c, a)) == L.frobenius(ea, d - 1); });
    if (i == 0) om.run("frobenius order d", [&] { return frob_power(c, a, d) == a; });
  }
  out.push_back(om.result());

  if (b.theta) {
    const ThetaContext& t = *b.theta;
    Group th("theta");
    th.run("identity is all ones", [&] { return theta_to_element(t, FqVec(d, K.one())) == L.one(); });
    th.check(K.add(K.mul(t.frak_a, t.frak_c), K.mul(K.from_int(d), t.frak_b)) == K.one(), "a c + d b = 1");
    for (int i = 0; i < trials; ++i) {
      FqVec a = random_vec(K, d, rng), bb = random_vec(K, d, rng);
      ExtElement ea = theta_to_element(t, a), eb = theta_to_element(t, bb);
      th.run("multiply", [&] {
        ThetaTrace tr;
        FqVec r = theta_multiply(t, a, bb, &tr);
        return theta_to_element(t, r) == L.mul(ea, eb) && tr.convolutions == 5;
      });
      th.run("frobenius shift", [&] { return theta_to_element(t, theta_frobenius(t, a, 1)) == L.frobenius(ea); });
      th.run("frobenius inverse shift", [&] { return theta_to_element(t, theta_frobenius(t, a, -1)) == L.frobenius(ea, d - 1); });
      th.run("coordinate change", [&] { return element_to_theta(t, ea) == a && omega_to_theta(t, theta_to_omega(t, a)) == a; });
    }
    out.push_back(th.result());
  }

  Group ps("psi");
  const PsiContext* pc = b.psi.get();
  for (int i = 0; i < trials; ++i) {
    FqVec a = random_vec(K, d, rng);
    ps.run("omega to psi", [&] {
      return omega_to_psi(c, pc, a) == generic_convert(c, a, Basis::Omega, Basis::Psi) &&
             L.from_coords(omega_to_psi(c, pc, a)) == omega_to_element(c, a);
    });
    ps.run("psi to omega", [&] { return psi_to_omega(c, pc, omega_to_psi(c, pc, a)) == a; });
  }
  out.push_back(ps.result());

  Group inv("inversion");
  for (int i = 0; i < trials; ++i) {
    FqVec a = random_nonzero(K, d, rng);
    inv.run("omega inverse", [&] { return omega_multiply(c, a, invert_omega(c, pc, a)) == unit(K, d, 0); });
    if (b.theta) {
      const ThetaContext& t = *b.theta;
      inv.run("theta inverse paths", [&] {
        FqVec x = invert_theta(t, pc, a);
        return theta_multiply(t, a, x) == FqVec(d, K.one()) && lagrange_invert(t, a) == x;
      });
    }
  }
  out.push_back(inv.result());
  return out;
}

}  // namespace ellbasis
