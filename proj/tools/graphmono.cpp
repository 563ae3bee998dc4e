#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "monograph/cover.hpp"
#include "monograph/dini.hpp"
#include "monograph/geometry.hpp"
#include "monograph/json_io.hpp"
#include "monograph/mpoint.hpp"
#include "monograph/mzv.hpp"
#include "monograph/pc.hpp"
#include "monograph/peaks.hpp"
#include "monograph/pl_function.hpp"
#include "monograph/point_class.hpp"
#include "monograph/series.hpp"
#include "monograph/svg.hpp"
#include "monograph/witness.hpp"

using namespace monograph;
namespace fs = std::filesystem;

namespace {

// Exit contract: 0 = ran and passed, 1 = ran and the checked property
// failed/was refuted, 2 = usage error.
constexpr int kPass = 0, kRefuted = 1;

PLFunction load_pl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--in", "cannot read " + path);
  nlohmann::json j;
  in >> j;
  return pl_from_json(j);
}

void emit(const std::string& out_path, const nlohmann::json& j) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_atomic(out_path, j);
}

Rational random_unit_rational(std::mt19937_64& rng) {
  Rational r(static_cast<unsigned long>(rng() & 0xffffffffULL), 4294967296UL);
  r.canonicalize();
  return r;
}

std::vector<GraphPoint> sample_graph(const PLFunction& f, std::size_t count) {
  std::vector<GraphPoint> pts;
  pts.reserve(count);
  Rational lo = f.domain_lo(), hi = f.domain_hi();
  for (std::size_t i = 0; i < count; ++i) {
    Rational step(static_cast<long>(i), static_cast<long>(count - 1));
    step.canonicalize();
    Rational x = lo + (hi - lo) * step;
    pts.push_back({x, pl_eval(f, x)});
  }
  return pts;
}

// The deterministic artifact tree behind `reproduce`: every file depends
// only on the seed and the library, never on wall time or iteration order
// of anything unordered.
void run_reproduce(const std::string& dir, unsigned long seed) {
  fs::create_directories(dir);
  auto path = [&](const std::string& name) { return (fs::path(dir) / name).string(); };

  // Approximant family facts: variation, sup-differences, lengths.
  {
    std::ostringstream csv;
    csv << "level,variation,sup_diff_to_next,length_lo,length_hi\n";
    MzvLevel cur = mzv_level0();
    for (int n = 0; n <= 6; ++n) {
      MzvLevel next = mzv_refine(cur);
      auto [llo, lhi] = graph_length(cur.fn);
      csv << n << "," << to_string(pl_total_variation(cur.fn)) << ","
          << to_string(pl_sup_diff(next.fn, cur.fn)) << "," << to_string(llo) << ","
          << to_string(lhi) << "\n";
      cur = std::move(next);
    }
    write_text_atomic(path("approximants.csv"), csv.str());
  }

  MzvLevel f3 = mzv_approximant(3);
  write_json_atomic(path("f3.json"), pl_to_json(f3.fn));

  MzvLevel f5 = mzv_approximant(5);
  write_json_atomic(path("f5_pc.json"), pc_certificate_to_json(check_pc(f5.fn, 1)));
  write_json_atomic(path("f5_bracket.json"), bracket_to_json(monotonicity_bracket(f5.fn, 24)));

  // Point classification fractions under the pinned seed.
  {
    std::mt19937_64 rng(seed);
    std::ostringstream csv;
    csv << "depth,in_b_fraction\n";
    std::vector<Rational> xs;
    for (int i = 0; i < 2000; ++i) xs.push_back(random_unit_rational(rng));
    for (int d = 2; d <= 8; d += 2) {
      int in_b = 0;
      for (const Rational& x : xs)
        if (mzv_point_class(x, d).status == BStatus::InBUpTo) ++in_b;
      csv << d << "," << static_cast<double>(in_b) / static_cast<double>(xs.size()) << "\n";
    }
    write_text_atomic(path("classify.csv"), csv.str());
  }

  // Series probes.
  {
    std::ostringstream csv;
    csv << "n,ratio_lb\n";
    for (int n = 2; n <= 7; ++n)
      csv << n << "," << to_string(nomp_witness(Rational(1, 3), n).ratio_lb) << "\n";
    write_text_atomic(path("nomp_bounds.csv"), csv.str());
  }
  {
    std::ostringstream csv;
    csv << "scale_log2,right_quotient\n";
    TakagiEvaluator tak(80);
    Rational x(1, 4);
    Rational fx = tak.at(x).value;
    for (long m = 4; m <= 24; m += 4) {
      Rational h = pow2(-m);
      csv << m << "," << to_string((tak.at(x + h).value - fx) / h) << "\n";
    }
    write_text_atomic(path("takagi_quotients.csv"), csv.str());
  }

  // Peak-sum model (small, so the tree is cheap to rebuild).
  PeakSumModel model = peak_build(3);
  write_json_atomic(path("peaks3.json"), model_to_json(model));
  PLFunction g3 = peak_pl(model, 3);
  {
    auto w = refute_monotone(g3, 2, 24);
    nlohmann::json j;
    j["witness_found"] = w.has_value();
    if (w) j["witness"] = witness_to_json(*w);
    write_json_atomic(path("peaks3_refute.json"), j);
  }
  {
    auto samples = sample_graph(g3, 20000);
    std::vector<GraphPoint> centers;
    for (std::size_t i = 0; i < samples.size(); i += samples.size() / 5) centers.push_back(samples[i]);
    std::vector<Rational> radii = {Rational(1, 8), Rational(1, 16), Rational(1, 32)};
    PorosityReport rep = porosity_estimate(samples, centers, radii);
    std::ostringstream csv;
    csv << "center_x,r,q\n";
    for (const auto& row : rep.rows)
      csv << to_string(row.center.x) << "," << to_string(row.r) << "," << to_string(row.q) << "\n";
    csv << "p_min,," << to_string(rep.p) << "\n";
    write_text_atomic(path("porosity.csv"), csv.str());
  }

  // Box dimension and a figure.
  {
    MzvLevel f6 = mzv_approximant(6);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < f6.fn.size(); ++i)
      pts.emplace_back(f6.fn.breakpoints()[i].get_d(), f6.fn.values()[i].get_d());
    BoxDimension bd = box_dimension(pts, 1.0 / 256, 1.0 / 4);
    std::ostringstream csv;
    csv << "side,count\n";
    for (const auto& c : bd.counts) csv << c.side << "," << c.count << "\n";
    csv << "slope," << bd.slope << "\n";
    write_text_atomic(path("boxdim.csv"), csv.str());

    SvgSeries series;
    for (std::size_t i = 0; i < f3.fn.size(); ++i)
      series.points.emplace_back(f3.fn.breakpoints()[i].get_d(), f3.fn.values()[i].get_d());
    write_text_atomic(path("f3.svg"), render_svg({series}));
  }
}

// Re-verifies an artifact from its contents alone.
int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--in", "cannot read " + path);
  nlohmann::json j;
  in >> j;

  if (j.contains("breakpoints")) {
    PLFunction f = pl_from_json(j);  // constructor validates
    std::cout << "ok: piecewise-linear function, " << f.size() << " breakpoints\n";
    return kPass;
  }
  if (j.contains("peaks")) {
    PeakSumModel m = model_from_json(j);
    bool ok = peak_model_invariants_ok(m);
    std::cout << (ok ? "ok" : "FAIL") << ": peak model invariants\n";
    return ok ? kPass : kRefuted;
  }
  if (j.contains("ratio_sq")) {
    WitnessTriple w = witness_from_json(j);
    bool ok = w.x < w.y && w.y < w.z && w.ratio_sq >= 0 &&
              w.ratio_lb * w.ratio_lb <= w.ratio_sq;
    std::cout << (ok ? "ok" : "FAIL") << ": witness triple internal consistency\n";
    return ok ? kPass : kRefuted;
  }
  if (j.contains("gap_lb")) {
    OscillationCertificate c;
    c.q3_lo = rational_from_json(j.at("q3_lo"));
    c.q3_hi = rational_from_json(j.at("q3_hi"));
    c.q4_lo = rational_from_json(j.at("q4_lo"));
    c.q4_hi = rational_from_json(j.at("q4_hi"));
    Rational gap = rational_from_json(j.at("gap_lb"));
    Rational lo = c.q3_lo - c.q4_hi, hi = c.q3_hi - c.q4_lo;
    bool ok = (lo > 0 && gap <= lo) || (hi < 0 && gap <= -hi) || gap == 0;
    std::cout << (ok ? "ok" : "FAIL") << ": oscillation gap bound\n";
    return ok ? kPass : kRefuted;
  }
  if (j.contains("outcome")) {
    std::cout << "ok: certificate parsed, outcome " << j.at("outcome").get<std::string>()
              << " (re-run check-pc against the function for a full re-check)\n";
    return kPass;
  }
  std::cout << "FAIL: unrecognized artifact\n";
  return kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and certified checks for pathological continuous functions"};
  app.require_subcommand(1);

  try {
    // construct
    auto* construct = app.add_subcommand("construct", "build a function and write it as JSON");
    std::string c_kind = "mzv", c_out;
    int c_level = 1;
    std::size_t c_peaks = 3;
    construct->add_option("kind", c_kind, "mzv | peaks")->check(CLI::IsMember({"mzv", "peaks"}));
    construct->add_option("--level", c_level, "refinement level (mzv)");
    construct->add_option("--peaks", c_peaks, "number of peaks (peaks)");
    construct->add_option("--out", c_out, "output path (stdout if omitted)");

    // check-pc
    auto* checkpc = app.add_subcommand("check-pc", "exact level-oscillation check");
    std::string pc_in, pc_c = "1", pc_out;
    checkpc->add_option("--in", pc_in)->required();
    checkpc->add_option("--c", pc_c, "constant as p/q");
    checkpc->add_option("--out", pc_out);

    // refute
    auto* refute = app.add_subcommand("refute", "search a graph-monotonicity refutation");
    std::string rf_in, rf_c = "1", rf_out;
    unsigned rf_budget = 24;
    refute->add_option("--in", rf_in)->required();
    refute->add_option("--c", rf_c);
    refute->add_option("--budget", rf_budget);
    refute->add_option("--out", rf_out);

    // bracket
    auto* bracket = app.add_subcommand("bracket", "two-sided monotonicity constant bracket");
    std::string br_in, br_out;
    unsigned br_budget = 24;
    bracket->add_option("--in", br_in)->required();
    bracket->add_option("--budget", br_budget);
    bracket->add_option("--out", br_out);

    // mpoint
    auto* mpoint = app.add_subcommand("mpoint", "certified local-monotonicity refutation");
    std::string mp_y = "0", mp_c = "10", mp_eps = "1/1024", mp_out;
    unsigned mp_mesh = 10;
    int mp_trunc = 24, mp_witness_n = 5;
    mpoint->add_option("--y", mp_y);
    mpoint->add_option("--c", mp_c);
    mpoint->add_option("--eps", mp_eps);
    mpoint->add_option("--mesh", mp_mesh);
    mpoint->add_option("--truncation", mp_trunc);
    mpoint->add_option("--witness-n", mp_witness_n, "series witness scale (0 = no hint)");
    mpoint->add_option("--out", mp_out);

    // dini
    auto* dini = app.add_subcommand("dini", "one-sided difference-quotient estimates");
    std::string dn_kind = "mzv", dn_in, dn_x = "1/2", dn_hmin = "1/1048576";
    unsigned dn_levels = 16;
    int dn_depth = 40;
    dini->add_option("--kind", dn_kind, "mzv | takagi | nomp | pl")
        ->check(CLI::IsMember({"mzv", "takagi", "nomp", "pl"}));
    dini->add_option("--in", dn_in, "function JSON (kind pl)");
    dini->add_option("--x", dn_x);
    dini->add_option("--hmin", dn_hmin);
    dini->add_option("--levels", dn_levels);
    dini->add_option("--depth", dn_depth, "evaluator depth / truncation");

    // classify
    auto* classify = app.add_subcommand("classify", "flat-block classification of points");
    std::string cl_x;
    int cl_depth = 8;
    unsigned cl_samples = 0;
    unsigned long cl_seed = 1;
    classify->add_option("--x", cl_x, "single point as p/q");
    classify->add_option("--depth", cl_depth);
    classify->add_option("--samples", cl_samples, "random sample count instead of --x");
    classify->add_option("--seed", cl_seed);

    // avoid
    auto* avoid = app.add_subcommand("avoid", "find a tiling square missed by the graph");
    std::string av_in, av_left = "0", av_bottom = "0", av_base = "1";
    avoid->add_option("--in", av_in)->required();
    avoid->add_option("--left", av_left);
    avoid->add_option("--bottom", av_bottom);
    avoid->add_option("--base", av_base);

    // porosity
    auto* porosity = app.add_subcommand("porosity", "empty-ball estimates along a graph");
    std::string po_in, po_out;
    std::size_t po_samples = 20000;
    porosity->add_option("--in", po_in)->required();
    porosity->add_option("--samples", po_samples);
    porosity->add_option("--out", po_out);

    // boxdim
    auto* boxdim = app.add_subcommand("boxdim", "box-counting slope of a graph");
    std::string bx_in;
    double bx_min = 1.0 / 256, bx_max = 0.25;
    std::size_t bx_samples = 4096;
    boxdim->add_option("--in", bx_in)->required();
    boxdim->add_option("--side-min", bx_min);
    boxdim->add_option("--side-max", bx_max);
    boxdim->add_option("--samples", bx_samples);

    // length
    auto* length = app.add_subcommand("length", "rational polyline-length bounds");
    std::string ln_in;
    long ln_den = 1000000;
    length->add_option("--in", ln_in)->required();
    length->add_option("--denominator", ln_den);

    // plot
    auto* plot = app.add_subcommand("plot", "render a graph (plus overlays) to SVG");
    std::string pl_in, pl_out = "plot.svg", pl_rect;
    plot->add_option("--in", pl_in)->required();
    plot->add_option("--out", pl_out);
    plot->add_option("--rect", pl_rect, "overlay rectangle left,bottom,base (5:3)");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "regenerate the deterministic artifact tree");
    std::string rp_suite = "acceptance", rp_dir = "artifacts";
    unsigned long rp_seed = 1;
    reproduce->add_option("--suite", rp_suite)->check(CLI::IsMember({"acceptance"}));
    reproduce->add_option("--out-dir", rp_dir);
    reproduce->add_option("--seed", rp_seed);

    // verify
    auto* verify = app.add_subcommand("verify", "re-verify a written artifact");
    std::string vf_in;
    verify->add_option("--in", vf_in)->required();

    app.parse(argc, argv);

    if (construct->parsed()) {
      if (c_kind == "mzv") {
        emit(c_out, pl_to_json(mzv_approximant(c_level).fn));
      } else {
        emit(c_out, model_to_json(peak_build(c_peaks)));
      }
      return kPass;
    }

    if (checkpc->parsed()) {
      PcCertificate cert = check_pc(load_pl(pc_in), parse_rational(pc_c));
      emit(pc_out, pc_certificate_to_json(cert));
      std::cout << (cert.pass ? "Pass" : "Fail") << "\n";
      return cert.pass ? kPass : kRefuted;
    }

    if (refute->parsed()) {
      auto w = refute_monotone(load_pl(rf_in), parse_rational(rf_c), rf_budget);
      if (w) {
        emit(rf_out, witness_to_json(*w));
        std::cout << "witness found, ratio >= " << to_string(w->ratio_lb) << "\n";
        return kRefuted;
      }
      std::cout << "no witness\n";
      return kPass;
    }

    if (bracket->parsed()) {
      MonotonicityBracket b = monotonicity_bracket(load_pl(br_in), br_budget);
      emit(br_out, bracket_to_json(b));
      std::cout << "c_lo=" << to_string(b.c_lo) << " c_hi=" << to_string(b.c_hi) << "\n";
      return kPass;
    }

    if (mpoint->parsed()) {
      Rational y = parse_rational(mp_y), c = parse_rational(mp_c), eps = parse_rational(mp_eps);
      NompEvaluator f(mp_trunc);
      std::vector<std::pair<Rational, Rational>> hints;
      if (mp_witness_n >= 2) {
        NompWitness w = nomp_witness(y, mp_witness_n);
        hints.emplace_back(w.x, w.z);
      }
      MpointResult res = mpoint_refute(f, y, c, eps, mp_mesh, hints);
      emit(mp_out, mpoint_to_json(res, y, c));
      return res.status == MpointStatus::Refuted ? kRefuted : kPass;
    }

    if (dini->parsed()) {
      Rational x = parse_rational(dn_x), hmin = parse_rational(dn_hmin);
      std::unique_ptr<CertifiedEvaluator> ev;
      if (dn_kind == "mzv") ev = std::make_unique<MzvLimitEvaluator>(dn_depth);
      else if (dn_kind == "takagi") ev = std::make_unique<TakagiEvaluator>(dn_depth);
      else if (dn_kind == "nomp") ev = std::make_unique<NompEvaluator>(dn_depth);
      else {
        if (dn_in.empty()) throw CLI::ValidationError("--in", "kind pl needs --in");
        ev = std::make_unique<PLEvaluator>(load_pl(dn_in));
      }
      DiniEstimate est = dini_estimate(*ev, x, hmin, dn_levels);
      std::cout << "x,side,upper,lower,certified\n";
      if (est.right.probed)
        std::cout << to_string(x) << ",right," << to_string(est.right.upper) << ","
                  << to_string(est.right.lower) << "," << est.right.certified << "\n";
      if (est.left.probed)
        std::cout << to_string(x) << ",left," << to_string(est.left.upper) << ","
                  << to_string(est.left.lower) << "," << est.left.certified << "\n";
      return kPass;
    }

    if (classify->parsed()) {
      if (!cl_x.empty()) {
        PointClass pc = mzv_point_class(parse_rational(cl_x), cl_depth);
        if (pc.status == BStatus::NotInB) {
          std::cout << "NotInB at level " << pc.witness_level << "\n";
          auto cert = mzv_oscillation_certificate(pc);
          if (cert)
            std::cout << "oscillation gap >= " << to_string(cert->gap_lb)
                      << (cert->certified ? " (certified)" : " (not certified)") << "\n";
        } else {
          std::cout << "InB up to depth " << cl_depth << "\n";
        }
        return kPass;
      }
      std::mt19937_64 rng(cl_seed);
      unsigned in_b = 0;
      for (unsigned i = 0; i < cl_samples; ++i)
        if (mzv_point_class(random_unit_rational(rng), cl_depth).status == BStatus::InBUpTo)
          ++in_b;
      std::cout << "in_b_fraction=" << static_cast<double>(in_b) / std::max(1u, cl_samples)
                << "\n";
      return kPass;
    }

    if (avoid->parsed()) {
      Rect53 r{parse_rational(av_left), parse_rational(av_bottom), parse_rational(av_base)};
      auto idx = square_avoidance(load_pl(av_in), r);
      if (idx) {
        std::cout << "avoided square index " << *idx << "\n";
        return kPass;
      }
      std::cout << "no avoided square\n";
      return kRefuted;
    }

    if (porosity->parsed()) {
      PLFunction g = load_pl(po_in);
      auto samples = sample_graph(g, po_samples);
      std::vector<GraphPoint> centers;
      for (std::size_t i = 0; i < samples.size(); i += std::max<std::size_t>(1, samples.size() / 5))
        centers.push_back(samples[i]);
      std::vector<Rational> radii = {Rational(1, 8), Rational(1, 16), Rational(1, 32),
                                     Rational(1, 64)};
      PorosityReport rep = porosity_estimate(samples, centers, radii);
      std::ostringstream csv;
      csv << "center_x,center_y,r,q\n";
      for (const auto& row : rep.rows)
        csv << to_string(row.center.x) << "," << to_string(row.center.y) << ","
            << to_string(row.r) << "," << to_string(row.q) << "\n";
      csv << "p_min,,," << to_string(rep.p) << "\n";
      if (po_out.empty())
        std::cout << csv.str();
      else
        write_text_atomic(po_out, csv.str());
      return kPass;
    }

    if (boxdim->parsed()) {
      PLFunction f = load_pl(bx_in);
      std::vector<std::pair<double, double>> pts;
      auto samples = sample_graph(f, bx_samples);
      for (const auto& p : samples) pts.emplace_back(p.x.get_d(), p.y.get_d());
      BoxDimension bd = box_dimension(pts, bx_min, bx_max);
      std::cout << "slope=" << bd.slope << "\n";
      for (const auto& c : bd.counts) std::cout << c.side << "," << c.count << "\n";
      return kPass;
    }

    if (length->parsed()) {
      auto [lo, hi] = graph_length(load_pl(ln_in), Integer(ln_den));
      std::cout << "lower=" << to_string(lo) << "\nupper=" << to_string(hi) << "\n";
      return kPass;
    }

    if (plot->parsed()) {
      PLFunction f = load_pl(pl_in);
      SvgSeries series;
      for (std::size_t i = 0; i < f.size(); ++i)
        series.points.emplace_back(f.breakpoints()[i].get_d(), f.values()[i].get_d());
      std::vector<SvgRect> rects;
      if (!pl_rect.empty()) {
        std::istringstream ss(pl_rect);
        std::string a, b, c;
        std::getline(ss, a, ',');
        std::getline(ss, b, ',');
        std::getline(ss, c, ',');
        Rect53 r{parse_rational(a), parse_rational(b), parse_rational(c)};
        rects.push_back({r.left.get_d(), r.bottom.get_d(), r.base.get_d(), r.height().get_d()});
      }
      write_text_atomic(pl_out, render_svg({series}, rects));
      return kPass;
    }

    if (reproduce->parsed()) {
      run_reproduce(rp_dir, rp_seed);
      std::cout << "artifacts written to " << rp_dir << "\n";
      return kPass;
    }

    if (verify->parsed()) return run_verify(vf_in);
  } catch (const CLI::Error& e) {
    app.exit(e);  // prints help or the parse error
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
