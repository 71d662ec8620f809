// gorenstein: command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gorenstein/gorenstein.hpp"

#ifndef GORENSTEIN_EXAMPLES_DIR
#define GORENSTEIN_EXAMPLES_DIR "examples"
#endif

using namespace gorenstein;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kInputError = 1, kVerifyFailed = 2;

struct Options {
  std::string field;
  bool json = false;
  std::vector<std::string> argv;
};

struct Loaded {
  RingFile file;
  std::string raw;
  std::string path;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Loaded load(const std::string& path, const Options& o) {
  Loaded l;
  l.path = path;
  l.raw = slurp(path);
  try {
    l.file = parse_ring_file(l.raw);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
  if (!o.field.empty()) l.file.field = parse_field(o.field);
  return l;
}

template <FieldScalar K>
ArtinAlgebra<K> algebra(const Loaded& l) {
  try {
    return load_algebra<K>(l.file);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) throw;
    throw Error(e.code(), l.path + ": " + e.message());
  }
}

/// Calls fn.template operator()<K>() with K matching the field.
template <class F>
decltype(auto) with_field(const FieldSpec& f, F&& fn) {
  if (f.kind == FieldKind::Rationals) return fn.template operator()<Rational>();
  return fn.template operator()<ModP>();
}

Report new_report(const Options& o, const std::vector<const Loaded*>& inputs, const FieldSpec& field) {
  Report r;
  r.command = o.argv;
  std::string all;
  for (const auto* l : inputs) all += l->raw + '\x1f';
  all += field.to_string();
  r.input_digest = fnv1a_digest(all);
  if (auto w = characteristic_two_warning(field); !w.empty()) r.warnings.push_back(w);
  return r;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class T>
std::string tuple_string(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

void print_invariants(const InvariantReport& r) {
  std::cout << "length                 " << r.length << "\n"
            << "edim                   " << r.edim << "\n"
            << "type                   " << r.type << "\n"
            << "loewy_length           " << r.loewy_length << "\n"
            << "hilbert                " << tuple_string(r.hilbert) << "\n"
            << "gorenstein             " << std::boolalpha << r.gorenstein << "\n"
            << "stretched              " << r.stretched << "\n"
            << "short                  " << r.short_ring << "\n"
            << "complete_intersection  " << r.complete_intersection << "\n";
}

template <FieldScalar K>
void print_ring(const std::string& label, const ArtinAlgebra<K>& A) {
  std::cout << label << ": " << A.field().to_string() << "[" << join(A.ring()->vars) << "] / ("
            << join(A.presentation().to_strings()) << ")\n";
}

void print_checks(const VerificationReport& rep) {
  for (const auto& c : rep.checks)
    std::cout << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
}

int emit(const Options& o, const Report& r, int code) {
  if (o.json) std::cout << r.to_json().dump(2) << "\n";
  else
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  return code;
}

// ---- subcommands -----------------------------------------------------------

int cmd_analyze(const Options& o, const std::string& path) {
  auto in = load(path, o);
  return with_field(in.file.field, [&]<FieldScalar K>() {
    auto Q = algebra<K>(in);
    auto rep = new_report(o, {&in}, in.file.field);
    auto inv = Q.invariants();
    rep.results["invariants"] = to_json(inv);
    rep.results["presentation"] = to_json(Q);
    if (!o.json) {
      print_ring("ring", Q);
      print_invariants(inv);
    }
    return emit(o, rep, kOk);
  });
}

template <FieldScalar K>
Json graded_json(const GradedAlgebra<K>& G) {
  return Json{{"vars", G.ring()->vars}, {"ideal", G.presentation().to_strings()}, {"hilbert", G.hilbert()}};
}

int cmd_gr(const Options& o, const std::string& path, bool with_iarrobino, bool iarrobino_only) {
  auto in = load(path, o);
  return with_field(in.file.field, [&]<FieldScalar K>() {
    auto Q = algebra<K>(in);
    auto rep = new_report(o, {&in}, in.file.field);
    auto G = associated_graded(Q);
    if (!iarrobino_only) {
      rep.results["gr"] = graded_json(G);
      rep.results["gr"]["type"] = G.algebra().type();
      auto split = graded_fibre_split(G);
      Json js = nullptr;
      if (split)
        js = Json{{"A", graded_json(split->A)}, {"B", graded_json(split->B)}, {"loewy_length_B", split->k_B},
                  {"method", split->method}};
      rep.results["fibre_split"] = js;
      if (!o.json) {
        std::cout << "gr: " << G.algebra().field().to_string() << "[" << join(G.ring()->vars) << "] / ("
                  << join(G.presentation().to_strings()) << ")\n"
                  << "hilbert " << tuple_string(G.hilbert()) << "  type " << G.algebra().type() << "\n";
        if (split) {
          print_ring("A", split->A.algebra());
          print_ring("B", split->B.algebra());
        } else {
          std::cout << "no fibre product splitting found\n";
        }
      }
    }
    if (with_iarrobino || iarrobino_only) {
      auto data = iarrobino_ideal(Q, G);
      const auto& Q0 = data.Q0;
      rep.results["iarrobino"] = Json{{"C_dims", data.c_dims}, {"Q0", graded_json(Q0)}, {"Q0_type", Q0.algebra().type()}};
      if (!o.json) {
        std::cout << "C dims " << tuple_string(data.c_dims) << "\n";
        print_ring("Q0", Q0.algebra());
        std::cout << "Q0 hilbert " << tuple_string(Q0.hilbert()) << "  type " << Q0.algebra().type() << "\n";
      }
    }
    return emit(o, rep, kOk);
  });
}

struct SumArgs {
  bool fibre = false, connect = false;
  std::string u, delta_r, delta_s, out;
};

int cmd_sum(const Options& o, const std::string& rpath, const std::string& spath, const SumArgs& a) {
  if (a.fibre == a.connect) throw Error(ErrorCode::InvalidArgument, "give exactly one of --fibre and --connect");
  auto rin = load(rpath, o), sin = load(spath, o);
  if (!(rin.file.field == sin.file.field)) throw Error(ErrorCode::RingMismatch, "R and S are over different fields");
  return with_field(rin.file.field, [&]<FieldScalar K>() {
    auto R = algebra<K>(rin);
    auto S = algebra<K>(sin);
    auto rep = new_report(o, {&rin, &sin}, rin.file.field);
    ArtinAlgebra<K> T;
    if (a.fibre) {
      T = fibre_product(R, S);
    } else {
      ConnectedSumSpec<K> spec;
      if (!a.delta_r.empty()) spec.delta_R = R.element(a.delta_r);
      if (!a.delta_s.empty()) spec.delta_S = S.element(a.delta_s);
      if (!a.u.empty()) {
        auto u = parse_polynomial<K>(R.ring(), a.u);
        if (u.degree() > 0) throw Error(ErrorCode::InvalidArgument, "--u must be a scalar");
        if (u.is_zero()) throw Error(ErrorCode::InvalidArgument, "--u must be nonzero");
        spec.u = u.leading_coefficient();
      }
      T = connected_sum(R, S, spec);
    }
    auto pres = T.minimal_presentation();
    rep.results["operation"] = a.fibre ? "fibre_product" : "connected_sum";
    rep.results["presentation"] = to_json(pres);
    rep.results["invariants"] = to_json(T.invariants());
    if (!a.out.empty()) {
      std::ofstream f(a.out);
      if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + a.out);
      f << format_ring_file(pres);
    }
    if (!o.json) {
      if (a.out.empty()) std::cout << format_ring_file(pres);
      else std::cout << "wrote " << a.out << "\n";
      print_invariants(T.invariants());
    }
    return emit(o, rep, kOk);
  });
}

int cmd_decompose(const Options& o, const std::string& path, const std::string& cert_out) {
  auto in = load(path, o);
  return with_field(in.file.field, [&]<FieldScalar K>() {
    auto Q = algebra<K>(in);
    auto rep = new_report(o, {&in}, in.file.field);
    auto res = decompose(Q);
    auto j = to_json(res, Q);
    rep.results["decomposition"] = j;
    if (res.kind == DecompositionKind::Unknown) rep.warnings.push_back("decomposition status unknown");
    if (!cert_out.empty() && j.contains("certificate")) {
      std::ofstream f(cert_out);
      if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + cert_out);
      f << j["certificate"].dump(2) << "\n";
    }
    if (!o.json) {
      std::cout << "status: " << to_string(res.kind) << "\n";
      if (res.indecomposable)
        std::cout << "certificate: " << to_string(res.indecomposable->kind) << " (" << res.indecomposable->reason << ")\n";
      if (res.certificate) {
        const auto& c = *res.certificate;
        std::cout << "method: " << c.provenance << "\n";
        for (std::size_t i = 0; i < c.y_vars.size(); ++i) std::cout << "  " << c.y_vars[i] << " -> " << c.y_images[i].to_string() << "\n";
        for (std::size_t i = 0; i < c.z_vars.size(); ++i) std::cout << "  " << c.z_vars[i] << " -> " << c.z_images[i].to_string() << "\n";
        print_ring("R", certificate_component_R(c));
        print_ring("S", certificate_component_S(c));
        std::cout << "delta_R = " << c.delta_R.to_string() << ", delta_S = " << c.delta_S.to_string() << ", phi = " << c.phi << "\n";
      }
      for (const auto& d : res.diagnostics) std::cout << "note: " << d << "\n";
    }
    return emit(o, rep, kOk);
  });
}

int cmd_verify(const Options& o, const std::string& path, const std::string& cert_path, int order) {
  auto in = load(path, o);
  Loaded cert{{}, slurp(cert_path), cert_path};
  Json j;
  try {
    j = Json::parse(cert.raw);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, cert_path + ": " + e.what());
  }
  return with_field(in.file.field, [&]<FieldScalar K>() {
    auto Q = algebra<K>(in);
    auto rep = new_report(o, {&in, &cert}, in.file.field);
    auto c = certificate_from_json<K>(j, Q);
    auto v = verify_certificate(Q, c);
    rep.results["certificate"] = to_json(v);
    bool ok = v.ok();
    if (ok) {
      auto Qc = ArtinAlgebra<K>::from_presentation(c.Q_ideal);
      auto id = verify_connected_sum_identities(Qc, certificate_component_R(c), certificate_component_S(c), order);
      rep.results["identities"] = to_json(id);
      ok = id.ok();
      if (!o.json) {
        std::cout << "certificate\n";
        print_checks(v);
        std::cout << "identities\n";
        print_checks(id);
      }
    } else if (!o.json) {
      std::cout << "certificate\n";
      print_checks(v);
    }
    rep.results["verified"] = ok;
    if (!o.json) std::cout << (ok ? "verified" : "verification FAILED") << "\n";
    return emit(o, rep, ok ? kOk : kVerifyFailed);
  });
}

int cmd_poincare(const Options& o, const std::string& path, int order, bool fit) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "--order must be positive");
  auto in = load(path, o);
  return with_field(in.file.field, [&]<FieldScalar K>() {
    auto Q = algebra<K>(in);
    auto rep = new_report(o, {&in}, in.file.field);
    auto log = betti_numbers(Q, order);
    auto P = log.poincare();
    rep.results["betti"] = log.betti;
    rep.results["inverse_series"] = to_json(P.inverse());
    if (!o.json) {
      std::cout << "betti " << tuple_string(log.betti) << "\n";
      std::cout << "1/P   " << P.inverse().to_string() << "\n";
    }
    if (fit) {
      auto f = rational_fit(P, 8);
      rep.results["fit"] = f ? to_json(*f) : Json(nullptr);
      if (!o.json) {
        if (f) std::cout << "P(t) = (" << polynomial_in_t(f->numerator) << ") / (" << polynomial_in_t(f->denominator) << ")\n";
        else std::cout << "no rational fit of total degree <= 8 at this order\n";
      }
    }
    return emit(o, rep, kOk);
  });
}

struct GenArgs {
  std::string profile = "stretched", out_dir = ".";
  int h = 3, s = 4, n = 2, height = 20;
  std::size_t count = 1;
  std::uint64_t seed = 0;
};

int cmd_gen(const Options& o, const GenArgs& g) {
  auto field = o.field.empty() ? FieldSpec::rationals() : parse_field(o.field);
  auto profile = parse_profile(g.profile);
  CorpusParams p;
  p.h = g.h;
  p.s = g.s;
  p.n = g.n;
  p.height = g.height;
  p.count = g.count;
  return with_field(field, [&]<FieldScalar K>() {
    auto corpus = random_corpus<K>(profile, p, g.seed, field);
    fs::create_directories(g.out_dir);
    Report rep;
    rep.command = o.argv;
    rep.input_digest = fnv1a_digest(g.profile + ":" + std::to_string(g.seed));
    if (auto w = characteristic_two_warning(field); !w.empty()) rep.warnings.push_back(w);
    Json files = Json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto name = g.profile + "_s" + std::to_string(g.seed) + "_" + std::to_string(i) + ".ring";
      auto path = (fs::path(g.out_dir) / name).string();
      std::ofstream f(path);
      if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
      f << format_ring_file(corpus[i].algebra.presentation()) << "# dual " << corpus[i].dual.to_string() << "\n";
      files.push_back(Json{{"path", path}, {"dual", corpus[i].dual.to_string()}, {"hilbert", corpus[i].algebra.hilbert()}});
      if (!o.json) std::cout << path << "  H = " << tuple_string(corpus[i].algebra.hilbert()) << "\n";
    }
    rep.results["files"] = files;
    return emit(o, rep, kOk);
  });
}

// ---- paper-suite ------------------------------------------------------------

struct SuiteRow {
  std::string label, check;
  bool ok;
  std::string detail;
};

using QA = ArtinAlgebra<Rational>;

QA suite_ring(const std::string& dir, const std::string& name) {
  return load_algebra<Rational>(read_ring_file((fs::path(dir) / (name + ".ring")).string()));
}

template <class F>
void suite_case(std::vector<SuiteRow>& rows, const std::string& label, const std::string& check, F&& body) {
  SuiteRow r{label, check, false, {}};
  try {
    r.ok = body(r.detail);
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  rows.push_back(std::move(r));
}

bool split_matches(const GradedAlgebra<Rational>& G, const std::vector<std::size_t>& hA, const std::vector<std::size_t>& hB,
                   std::string& detail) {
  auto sp = graded_fibre_split(G);
  if (!sp) {
    detail = "no splitting found";
    return false;
  }
  detail = "A " + tuple_string(sp->A.hilbert()) + ", B " + tuple_string(sp->B.hilbert());
  return sp->A.hilbert() == hA && sp->B.hilbert() == hB;
}

bool indecomposable_as(const QA& Q, IndecomposabilityKind kind, std::string& detail) {
  auto r = decompose(Q);
  detail = to_string(r.kind);
  if (r.indecomposable) detail += std::string(" ") + to_string(r.indecomposable->kind);
  return r.indecomposable && r.indecomposable->kind == kind;
}

bool decomposes_verified(const QA& Q, std::string& detail) {
  auto r = decompose(Q);
  detail = to_string(r.kind);
  if (!r.certificate) return false;
  detail += " via " + r.certificate->provenance;
  return verify_certificate(Q, *r.certificate).ok();
}

int cmd_paper_suite(const Options& o, const std::string& dir) {
  std::vector<SuiteRow> rows;
  suite_case(rows, "Example 2.3", "R # S has gr with H = (1,3,3,2,1), type 2", [&](std::string& d) {
    auto G = associated_graded(suite_ring(dir, "ex2_3"));
    d = "H " + tuple_string(G.hilbert()) + ", type " + std::to_string(G.algebra().type());
    return G.hilbert() == std::vector<std::size_t>{1, 3, 3, 2, 1} && G.algebra().type() == 2;
  });
  suite_case(rows, "Example 2.3", "socle of G spanned by y1*y2, z^4", [&](std::string& d) {
    auto G = suite_ring(dir, "ex2_3_G");
    Subspace<Rational> want(G.length());
    want.insert(to_sparse(G.element("Y1*Y2")));
    want.insert(to_sparse(G.element("Z^4")));
    d = "socle dim " + std::to_string(G.socle().dim());
    return G.socle().span == want;
  });
  suite_case(rows, "Example 2.3", "G is not a fibre product", [&](std::string& d) {
    auto G = GradedAlgebra<Rational>(suite_ring(dir, "ex2_3_G").presentation());
    bool none = !graded_fibre_split(G);
    d = none ? "no splitting" : "splitting found";
    return none;
  });
  suite_case(rows, "Example 2.3", "R # S decomposes", [&](std::string& d) { return decomposes_verified(suite_ring(dir, "ex2_3"), d); });
  suite_case(rows, "Remark 2.4(c)", "yz, y^2-z^2 decomposes as k[y]/y^3 # k[z]/z^3", [&](std::string& d) {
    auto Q = suite_ring(dir, "rem2_4c");
    auto r = decompose(Q);
    if (!r.certificate) return false;
    auto R = certificate_component_R(*r.certificate), S = certificate_component_S(*r.certificate);
    d = "R " + tuple_string(R.hilbert()) + ", S " + tuple_string(S.hilbert());
    return verify_certificate(Q, *r.certificate).ok() && R.hilbert() == std::vector<std::size_t>{1, 1, 1} &&
           S.hilbert() == std::vector<std::size_t>{1, 1, 1};
  });
  suite_case(rows, "Example 3.2", "complete intersection, edim 3: indecomposable", [&](std::string& d) {
    return indecomposable_as(suite_ring(dir, "ex3_2"), IndecomposabilityKind::CompleteIntersectionEdim3, d);
  });
  suite_case(rows, "Example 3.2", "gr = k[X,Y]/(X^4-Y^4, X^2Y^3, X^3Y^2) x k[Z]/Z^2", [&](std::string& d) {
    return split_matches(associated_graded(suite_ring(dir, "ex3_2")), {1, 2, 3, 4, 4, 2, 1}, {1, 1}, d);
  });
  suite_case(rows, "Example 4.1", "gr = k[X]/X^9 x k[Y]/Y^4", [&](std::string& d) {
    return split_matches(associated_graded(suite_ring(dir, "ex4_1")), {1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1}, d);
  });
  suite_case(rows, "Example 4.1", "H(2) = 3 gives the H(2) bound certificate", [&](std::string& d) {
    auto Q = suite_ring(dir, "ex4_1");
    std::string dd;
    bool ok = Q.hilbert().size() > 2 && Q.hilbert()[2] == 3 && indecomposable_as(Q, IndecomposabilityKind::HilbertH2Bound, dd);
    d = "H " + tuple_string(Q.hilbert()) + "; " + dd;
    return ok;
  });
  suite_case(rows, "Example 4.16(a)", "complete intersection, edim 3: indecomposable", [&](std::string& d) {
    return indecomposable_as(suite_ring(dir, "ex4_16a"), IndecomposabilityKind::CompleteIntersectionEdim3, d);
  });
  suite_case(rows, "Example 4.16(a)", "gr = k[X]/X^6 x k[Y,Z]/(Y^4, YZ, Z^4)", [&](std::string& d) {
    return split_matches(associated_graded(suite_ring(dir, "ex4_16a")), {1, 1, 1, 1, 1, 1}, {1, 2, 2, 2}, d);
  });
  suite_case(rows, "Example 4.16(a)", "setup conclusions hold, IJ not in m^4", [&](std::string& d) {
    auto Q = suite_ring(dir, "ex4_16a");
    auto st = verify_setup_theorems(Q, *graded_fibre_split(associated_graded(Q)));
    d = "IJ in m^4: " + std::string(st.ij_in_m_k_plus_1 ? "yes" : "no");
    return st.conclusions.ok() && !st.ij_in_m_k_plus_1;
  });
  suite_case(rows, "Example 4.16(b)", "complete intersection, edim 3: indecomposable", [&](std::string& d) {
    return indecomposable_as(suite_ring(dir, "ex4_16b"), IndecomposabilityKind::CompleteIntersectionEdim3, d);
  });
  suite_case(rows, "Example 4.16(b)", "gr = k[X,Y]/(X^2, Y^5) x k[Z]/Z^4", [&](std::string& d) {
    return split_matches(associated_graded(suite_ring(dir, "ex4_16b")), {1, 2, 2, 2, 2, 1}, {1, 1, 1, 1}, d);
  });
  suite_case(rows, "Example 4.16(b)", "setup conclusions hold, IJ in m^4", [&](std::string& d) {
    auto Q = suite_ring(dir, "ex4_16b");
    auto st = verify_setup_theorems(Q, *graded_fibre_split(associated_graded(Q)));
    d = "IJ in m^4: " + std::string(st.ij_in_m_k_plus_1 ? "yes" : "no");
    return st.conclusions.ok() && st.ij_in_m_k_plus_1;
  });

  bool all = true;
  Json table = Json::array();
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.label.size());
  for (const auto& r : rows) {
    all = all && r.ok;
    table.push_back(Json{{"label", r.label}, {"check", r.check}, {"pass", r.ok}, {"detail", r.detail}});
    if (!o.json)
      std::cout << (r.ok ? "PASS  " : "FAIL  ") << r.label << std::string(w - r.label.size() + 2, ' ') << r.check
                << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
  }
  Report rep;
  rep.command = o.argv;
  rep.input_digest = fnv1a_digest(dir);
  rep.results["suite"] = table;
  rep.results["all_pass"] = all;
  return emit(o, rep, all ? kOk : kVerifyFailed);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int i = 1; i < argc; ++i) o.argv.emplace_back(argv[i]);

  CLI::App app{"Gorenstein Artin local rings: connected sums, associated graded rings, Poincare series"};
  app.require_subcommand(1);
  app.add_option("--field", o.field, "override the coefficient field, e.g. Q or Fp:32003");
  app.add_flag("--json", o.json, "print the JSON report");

  std::string ring, ring2, cert, out;
  bool iarrobino_flag = false, fit = false;
  int order = 6, series_order = 8;
  SumArgs sa;
  GenArgs ga;
  std::string examples_dir = GORENSTEIN_EXAMPLES_DIR;

  auto* analyze = app.add_subcommand("analyze", "invariants of a ring");
  analyze->add_option("ring", ring)->required();
  auto* gr = app.add_subcommand("gr", "associated graded ring and its fibre product splitting");
  gr->add_option("ring", ring)->required();
  gr->add_flag("--iarrobino", iarrobino_flag, "add the Iarrobino ideal C and Q0 = G/C");
  auto* iarr = app.add_subcommand("iarrobino", "Iarrobino ideal C and Q0 = G/C");
  iarr->add_option("ring", ring)->required();
  auto* sum = app.add_subcommand("sum", "fibre product or connected sum of two rings");
  sum->add_option("R", ring)->required();
  sum->add_option("S", ring2)->required();
  sum->add_flag("--fibre", sa.fibre, "fibre product R x_k S");
  sum->add_flag("--connect", sa.connect, "connected sum R #_k S");
  sum->add_option("--u", sa.u, "unit u in delta_R - u delta_S");
  sum->add_option("--delta-r", sa.delta_r, "socle generator of R");
  sum->add_option("--delta-s", sa.delta_s, "socle generator of S");
  sum->add_option("-o,--output", sa.out, "write the result as a ring file");
  auto* dec = app.add_subcommand("decompose", "decompose as a connected sum, or certify indecomposability");
  dec->add_option("ring", ring)->required();
  dec->add_option("-o,--output", out, "write the certificate JSON");
  auto* ver = app.add_subcommand("verify", "check a decomposition certificate");
  ver->add_option("ring", ring)->required();
  ver->add_option("certificate", cert)->required();
  ver->add_option("--order", order, "Poincare series order for the identity checks (0 skips)")->check(CLI::Range(0, 12));
  auto* poin = app.add_subcommand("poincare", "Betti numbers of the residue field");
  poin->add_option("ring", ring)->required();
  poin->add_option("--order", series_order, "number of Betti numbers past beta_0 (default 8)")->check(CLI::Range(1, 16));
  poin->add_flag("--fit", fit, "search for a rational function matching the computed coefficients");
  auto* gen = app.add_subcommand("gen", "seeded random Gorenstein rings from dual polynomials");
  gen->set_help_flag("--help", "print this help message and exit");
  gen->add_option("--profile", ga.profile, "stretched, short or general");
  gen->add_option("--h", ga.h, "embedding dimension");
  gen->add_option("--s", ga.s, "socle degree");
  gen->add_option("--n", ga.n, "H(2) of short rings");
  gen->add_option("--height", ga.height, "coefficient bound");
  gen->add_option("--count", ga.count, "number of rings");
  gen->add_option("--seed", ga.seed, "random seed");
  gen->add_option("-o,--output", ga.out_dir, "output directory");
  auto* suite = app.add_subcommand("paper-suite", "run the bundled example corpus");
  suite->add_option("--examples", examples_dir, "directory holding the .ring corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(o, ring);
    if (*gr) return cmd_gr(o, ring, iarrobino_flag, false);
    if (*iarr) return cmd_gr(o, ring, true, true);
    if (*sum) return cmd_sum(o, ring, ring2, sa);
    if (*dec) return cmd_decompose(o, ring, out);
    if (*ver) return cmd_verify(o, ring, cert, order);
    if (*poin) return cmd_poincare(o, ring, series_order, fit);
    if (*gen) return cmd_gen(o, ga);
    if (*suite) return cmd_paper_suite(o, examples_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::CertificateMismatch ? kVerifyFailed : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
