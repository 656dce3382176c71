// metahecke: JSON command-line frontend for the metaplectic Hecke library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "metahecke/cocycle.hpp"
#include "metahecke/errors.hpp"
#include "metahecke/json_io.hpp"

using namespace metahecke;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Common {
  long seed = 0;
  bool pretty = false;
  std::vector<std::string> argv_echo;
};

void emit(const Common& c, Json body) {
  Json doc;
  doc["version"] = kVersion;
  doc["seed"] = c.seed;
  doc["input"] = c.argv_echo;
  doc.update(body);
  std::cout << (c.pretty ? doc.dump(2) : doc.dump()) << "\n";
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

CoverParams cover_from_flags(const std::string& cover, long n, long c, long d) {
  if (cover == "kp") return CoverParams::kp(n, c);
  if (cover == "savin") return CoverParams::savin(n);
  if (cover == "custom") return CoverParams::make(n, c, d);
  throw std::invalid_argument("cover must be kp, savin or custom");
}

// Token grammar for hecke-mul words: factors joined by '*', each one of
// id | s<i> | pi | zeta | t(a,b,...) with an optional integer ^power.
HeckeElement parse_word(const HeckeAlgebra& H, const std::string& word) {
  HeckeElement acc = H.one();
  std::stringstream ss(word);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    tok.erase(remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw std::invalid_argument("empty factor");
    long power = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      power = std::stol(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    HeckeElement base = H.one();
    HeckeElement base_inv = H.one();
    if (tok == "id" || tok == "1") {
      // identity
    } else if (tok == "pi") {
      base = H.pi_elem();
      base_inv = H.pi_inverse();
    } else if (tok == "zeta") {
      base = H.zeta_elem();
      base_inv = H.zeta_inverse();
    } else if (tok.size() >= 2 && tok[0] == 's') {
      int i = std::stoi(tok.substr(1));
      base = H.simple(i);
      base_inv = H.simple_inverse(i);
    } else if (tok.size() > 3 && tok.rfind("t(", 0) == 0 && tok.back() == ')') {
      std::vector<long> lam = parse_long_list(tok.substr(2, tok.size() - 3));
      std::vector<int64_t> lam64(lam.begin(), lam.end());
      auto w = TwistedAffineWeylElem::translation(lam64, H.s());
      base = H.basis_elem(w);
      base_inv = H.basis_inverse(w);
    } else {
      throw std::invalid_argument("unrecognized factor: " + tok);
    }
    const HeckeElement& step = power >= 0 ? base : base_inv;
    for (long i = 0; i < std::abs(power); ++i) acc = H.multiply(acc, step);
  }
  return acc;
}

Json hecke_display(const HeckeElement& x) {
  Json arr = Json::array();
  for (const auto& [w, c] : x.coeffs()) {
    ReducedWord rw = reduced_word(w);
    std::ostringstream os;
    if (rw.a != 0) os << "pi^" << rw.a << "*";
    if (rw.b != 0) os << "zeta^" << rw.b << "*";
    if (rw.word.empty())
      os << "id";
    else
      for (size_t i = 0; i < rw.word.size(); ++i)
        os << (i ? "*s" : "s") << rw.word[i];
    arr.push_back(Json{{"word", os.str()}, {"coeff", c.to_string()}});
  }
  return arr;
}

BlockTorusElem blocks_from_json(const Json& j, long p, long k, long n) {
  BlockTorusElem u;
  for (const auto& b : j.at("blocks")) {
    TorusBlock blk{b.at("degree").get<long>(),
                   LocalField(FiniteField::make(p, k * b.at("degree").get<long>()), n),
                   lfelem_from_json(b.at("elem"))};
    u.blocks.push_back(std::move(blk));
  }
  return u;
}

int run(int argc, char** argv) {
  CLI::App app{"exact metaplectic cover / twisted affine Hecke algebra toolkit"};
  app.require_subcommand(1);

  Common common;
  for (int i = 0; i < argc; ++i) common.argv_echo.push_back(argv[i]);
  app.add_option("--seed", common.seed, "seed recorded in the output");
  app.add_flag("--pretty", common.pretty, "indented JSON output");

  // hilbert -------------------------------------------------------------
  auto* hil = app.add_subcommand("hilbert", "tame Hilbert symbol (x,y)_n");
  struct {
    long p = 5, k = 1, n = 2, f = 1;
    long vx = 0, ux = 0, vy = 0, uy = 0;
  } h;
  hil->add_option("--p", h.p)->required();
  hil->add_option("--k", h.k);
  hil->add_option("--n", h.n)->required();
  hil->add_option("--f", h.f, "unramified extension degree for y");
  hil->add_option("--vx", h.vx)->required();
  hil->add_option("--ux", h.ux, "dlog of the unit part of x")->required();
  hil->add_option("--vy", h.vy)->required();
  hil->add_option("--uy", h.uy, "dlog of the unit part of y")->required();
  hil->callback([&] {
    LocalField F(FiniteField::make(h.p, h.k), h.n);
    auto x = LocalFieldElem::make(h.vx, FFElem::from_dlog(h.ux));
    auto y = LocalFieldElem::make(h.vy, FFElem::from_dlog(h.uy));
    MuN sym = h.f == 1 ? hilbert_symbol(x, y, F)
                       : hilbert_symbol_unramified(
                             x, y, F,
                             LocalField(FiniteField::make(h.p, h.k * h.f), h.n));
    emit(common, Json{{"symbol", mun_to_json(sym)}});
  });

  // commutator ----------------------------------------------------------
  auto* com = app.add_subcommand(
      "commutator", "metaplectic commutator [.,.] from JSON block data");
  std::string com_input = "-";
  com->add_option("--input", com_input, "JSON file, or - for stdin");
  com->callback([&] {
    Json in;
    if (com_input == "-") {
      std::cin >> in;
    } else {
      std::ifstream f(com_input);
      if (!f) throw std::invalid_argument("cannot open " + com_input);
      f >> in;
    }
    long p = in.at("p").get<long>();
    long k = in.value("k", 1L);
    CoverParams P = CoverParams::make(in.at("n").get<long>(),
                                      in.at("c").get<long>(),
                                      in.at("d").get<long>());
    LocalField F(FiniteField::make(p, k), P.n);
    std::string mode = in.value("mode", std::string("torus"));
    MuN out;
    if (mode == "center") {
      out = commutator_center(lfelem_from_json(in.at("lambda")),
                              lfelem_from_json(in.at("det_g")),
                              in.at("r").get<long>(), F, P);
    } else if (mode == "torus") {
      out = commutator_field_torus(blocks_from_json(in.at("u"), p, k, P.n),
                                   blocks_from_json(in.at("v"), p, k, P.n), F,
                                   P);
    } else if (mode == "levi") {
      LeviDetData v;
      for (const auto& e : in.at("v").at("block_dets"))
        v.block_dets.push_back(lfelem_from_json(e));
      out = commutator_levi(blocks_from_json(in.at("u"), p, k, P.n), v, F, P);
    } else {
      throw std::invalid_argument("mode must be center, torus or levi");
    }
    emit(common, Json{{"commutator", mun_to_json(out)}});
  });

  // congruence ----------------------------------------------------------
  auto* cong = app.add_subcommand("congruence",
                                  "intertwining congruence lattice T(rho)");
  struct {
    long n = 0, c = 0, d = 0;
    std::string l, r, route = "kernel", flavor;
  } cg;
  cong->add_option("--n", cg.n)->required();
  cong->add_option("--c", cg.c)->required();
  cong->add_option("--d", cg.d)->required();
  cong->add_option("--l", cg.l, "comma list of l_i")->required();
  cong->add_option("--r", cg.r, "comma list of r_i")->required();
  cong->add_option("--route", cg.route, "kernel | enumerate | closed");
  cong->add_option("--flavor", cg.flavor, "kp | savin (route closed)");
  cong->callback([&] {
    IntVec l, r;
    for (long x : parse_long_list(cg.l)) l.push_back(x);
    for (long x : parse_long_list(cg.r)) r.push_back(x);
    CongruenceLattice L;
    if (cg.route == "kernel")
      L = solve_congruence(cg.n, cg.c, cg.d, l, r);
    else if (cg.route == "enumerate")
      L = solve_congruence_enumerate(cg.n, cg.c, cg.d, l, r);
    else if (cg.route == "closed")
      L = closed_form_solution(cg.n, cg.c, cg.d, l, r,
                               cg.flavor == "savin" ? CoverFlavor::Savin
                                                    : CoverFlavor::KP);
    else
      throw std::invalid_argument("unknown route: " + cg.route);
    emit(common, Json{{"t", L.t},
                      {"basis", intmat_to_json(L.basis)},
                      {"determinant", L.determinant()}});
  });

  // params --------------------------------------------------------------
  auto* par = app.add_subcommand("params", "derived invariants n0, d0, s0");
  struct {
    std::string cover = "custom";
    long n = 0, c = 0, d = 0, r0 = 1, m0 = 0, l0 = 1, t = 1, f = 1;
  } pp;
  auto add_cover_flags = [](CLI::App* sub, auto& st) {
    sub->add_option("--cover", st.cover, "kp | savin | custom");
    sub->add_option("--n", st.n)->required();
    sub->add_option("--c", st.c);
    sub->add_option("--d", st.d);
    sub->add_option("--r0", st.r0);
    sub->add_option("--m0", st.m0, "defaults to l0");
    sub->add_option("--l0", st.l0);
    sub->add_option("--t", st.t);
    sub->add_option("--f", st.f);
  };
  add_cover_flags(par, pp);
  par->callback([&] {
    TypeParams P = TypeParams::make(cover_from_flags(pp.cover, pp.n, pp.c, pp.d),
                                    pp.r0, pp.m0 ? pp.m0 : pp.l0, pp.l0, pp.t,
                                    pp.f);
    DerivedInvariants inv = invariants_n0_d0_s0(P);
    emit(common,
         Json{{"n0", inv.n0},
              {"d0", inv.d0},
              {"s0", inv.s0},
              {"s_star", rational_to_string(BigRat(1, 2 * inv.n0))}});
  });

  // w0check -------------------------------------------------------------
  auto* w0 = app.add_subcommand("w0check", "compare W0 and W0' lattices");
  struct {
    std::string cover = "custom";
    long n = 0, c = 0, d = 0, r0 = 1, m0 = 0, l0 = 1, t = 1, f = 1;
  } wp;
  add_cover_flags(w0, wp);
  w0->callback([&] {
    TypeParams P = TypeParams::make(cover_from_flags(wp.cover, wp.n, wp.c, wp.d),
                                    wp.r0, wp.m0 ? wp.m0 : wp.l0, wp.l0, wp.t,
                                    wp.f);
    W0Comparison cmp = w0_equals_w0prime(P);
    emit(common, Json{{"equal", cmp.equal},
                      {"index", cmp.index},
                      {"t0", intmat_to_json(cmp.t0.basis)},
                      {"w0prime", intmat_to_json(cmp.w0prime.basis)}});
  });

  // green-l0 ------------------------------------------------------------
  auto* gr = app.add_subcommand("green-l0",
                                "l0 from a regular character exponent");
  struct {
    long q = 2, m0 = 1, n = 1;
    int64_t xi = 1;
  } gg;
  gr->add_option("--q", gg.q)->required();
  gr->add_option("--m0", gg.m0)->required();
  gr->add_option("--n", gg.n)->required();
  gr->add_option("--xi", gg.xi, "exponent mod q^m0 - 1")->required();
  gr->callback([&] {
    GreenData g = l0_from_green(gg.q, gg.m0, gg.n, gg.xi);
    emit(common, Json{{"o", g.o}, {"l", g.l}});
  });

  // hecke-mul -----------------------------------------------------------
  auto* hm = app.add_subcommand("hecke-mul", "product in H0 / H / H~");
  struct {
    int t = 2;
    long s = 1;
    std::string flavor = "affine", lhs, rhs;
  } hh;
  hm->add_option("--t", hh.t)->required();
  hm->add_option("--s", hh.s);
  hm->add_option("--flavor", hh.flavor, "finite | affine | twisted");
  hm->add_option("--lhs", hh.lhs)->required();
  hm->add_option("--rhs", hh.rhs)->required();
  hm->callback([&] {
    AlgebraId id = hh.flavor == "finite"    ? AlgebraId::finite(hh.t)
                   : hh.flavor == "twisted" ? AlgebraId::twisted(hh.t, hh.s)
                                            : AlgebraId::affine(hh.t);
    HeckeAlgebra H(id);
    HeckeElement prod =
        H.multiply(parse_word(H, hh.lhs), parse_word(H, hh.rhs));
    emit(common, Json{{"terms", hecke_to_json(prod)},
                      {"display", hecke_display(prod)}});
  });

  // induce --------------------------------------------------------------
  auto* ind = app.add_subcommand("induce",
                                 "induced module from a Bernstein character");
  struct {
    int t = 2;
    long s = 1;
    std::string flavor = "affine", x, zval, specialize;
    bool constituents = false;
  } ii;
  ind->add_option("--t", ii.t)->required();
  ind->add_option("--s", ii.s);
  ind->add_option("--flavor", ii.flavor, "affine | twisted");
  ind->add_option("--x", ii.x, "comma list of rationals p/q")->required();
  ind->add_option("--zval", ii.zval, "twisted flavor: value of Z");
  ind->add_option("--specialize", ii.specialize, "v=<rational>");
  ind->add_flag("--constituents", ii.constituents,
                "list one-dimensional subs/quotients (needs --specialize)");
  ind->callback([&] {
    CharacterPoint cp;
    {
      std::stringstream ss(ii.x);
      std::string item;
      while (std::getline(ss, item, ','))
        cp.x.push_back(Scalar::from_rational(rational_from_string(item)));
    }
    if (!ii.zval.empty())
      cp.zval = Scalar::from_rational(rational_from_string(ii.zval));
    std::optional<BigRat> spec;
    if (!ii.specialize.empty()) {
      std::string s = ii.specialize;
      if (s.rfind("v=", 0) == 0) s = s.substr(2);
      spec = rational_from_string(s);
    }
    AlgebraId id = ii.flavor == "twisted" ? AlgebraId::twisted(ii.t, ii.s)
                                          : AlgebraId::affine(ii.t);
    InducedModule M = induce(cp, ii.t, id, spec);
    Json body;
    body["dim"] = M.dim;
    Json bas = Json::array();
    for (const auto& p : M.basis) bas.push_back(p.images);
    body["basis"] = bas;
    Json sig = Json::array();
    for (const auto& m : M.sigma_action) sig.push_back(mat_to_json(m));
    body["sigma_action"] = sig;
    body["pi_action"] = mat_to_json(M.pi_action);
    Json xact = Json::array();
    for (const auto& m : M.x_action) xact.push_back(mat_to_json(m));
    body["x_action"] = xact;
    if (M.zeta_scalar) body["zeta_scalar"] = scalar_to_json(*M.zeta_scalar);
    if (spec) {
      body["irreducible"] = is_irreducible(M, *spec);
      if (ii.constituents) {
        Json cons = Json::array();
        for (const auto& oc : one_dim_constituents(M, *spec)) {
          Json xs = Json::array();
          for (const auto& xv : oc.x_values)
            xs.push_back(rational_to_string(xv));
          cons.push_back(Json{{"sub", oc.is_sub},
                              {"sigma", rational_to_string(oc.sigma_value)},
                              {"x", xs}});
        }
        body["constituents"] = cons;
      }
    }
    emit(common, body);
  });

  // reducibility --------------------------------------------------------
  auto* red = app.add_subcommand("reducibility",
                                 "rank-one reducibility point s* = 1/(2 n0)");
  struct {
    std::string cover = "custom";
    long n = 0, c = 0, d = 0, r0 = 1, m0 = 0, l0 = 1, t = 2, f = 1;
  } rr;
  add_cover_flags(red, rr);
  red->callback([&] {
    TypeParams P = TypeParams::make(cover_from_flags(rr.cover, rr.n, rr.c, rr.d),
                                    rr.r0, rr.m0 ? rr.m0 : rr.l0, rr.l0, rr.t,
                                    rr.f);
    ReducibilityReport rep = reducibility_point(P);
    emit(common,
         Json{{"s_star", rational_to_string(rep.s_star)},
              {"n0", rep.n0},
              {"reducible_at_witness", rep.reducible_at_witness},
              {"irreducible_at_double", rep.irreducible_at_double},
              {"irreducible_at_half", rep.irreducible_at_half}});
  });

  // scan-w0 -------------------------------------------------------------
  auto* scan = app.add_subcommand(
      "scan-w0", "grid search for W0 != W0' over covers (n, c, d)");
  struct {
    long n_max = 8, t_max = 2, r0_max = 2;
    std::string out;
  } sc;
  scan->add_option("--n-max", sc.n_max);
  scan->add_option("--t-max", sc.t_max);
  scan->add_option("--r0-max", sc.r0_max);
  scan->add_option("--out", sc.out, "also write the report to this path");
  scan->callback([&] {
    if (sc.n_max > 16 || sc.t_max > 4 || sc.r0_max > 6)
      throw err_bound_exceeded("scan capped at n <= 16, t <= 4, r0 <= 6");
    Json rows = Json::array();
    long strict = 0;
    for (long n = 2; n <= sc.n_max; ++n)
      for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d)
          for (long l0 = 1; l0 <= n; ++l0) {
            if (n % l0 != 0) continue;
            for (long t = 1; t <= sc.t_max; ++t)
              for (long r0 = 1; r0 <= sc.r0_max; ++r0) {
                TypeParams P = TypeParams::make(CoverParams::make(n, c, d), r0,
                                                l0, l0, t);
                Json row{{"n", n},     {"c", c},   {"d", d}, {"r0", r0},
                         {"l0", l0},  {"t", t}};
                try {
                  W0Comparison cmp = w0_equals_w0prime(P);
                  row["index"] = cmp.index;
                  row["equal"] = cmp.equal;
                  if (!cmp.equal) ++strict;
                } catch (const Error& e) {
                  row["error"] = e.code();
                }
                rows.push_back(std::move(row));
              }
          }
    Json body{{"rows", rows}, {"strict_inclusions", strict}};
    if (!sc.out.empty()) {
      std::ofstream f(sc.out);
      f << body.dump(2) << "\n";
    }
    emit(common, body);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cout << Json{{"error", {{"code", e.code()}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << Json{{"error",
                       {{"code", "MalformedInput"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 2;
  }
}
