#include "vvlab/runner.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vvlab/errors.hpp"
#include "vvlab/experiments.hpp"
#include "vvlab/parse.hpp"
#include "vvlab/rng.hpp"
#include "vvlab/sha256.hpp"

namespace vvlab {

namespace {

enum class StepStatus { Ok, VerdictFailed, Unstable, Failed, Skipped };

const char* step_status_str(StepStatus s) {
  switch (s) {
  case StepStatus::Ok:
    return "ok";
  case StepStatus::VerdictFailed:
    return "verdict-failed";
  case StepStatus::Unstable:
    return "unstable";
  case StepStatus::Failed:
    return "failed";
  default:
    return "skipped";
  }
}

Json ideal_to_json(const Ideal& I) {
  Json arr = Json::array();
  for (const Polynomial& g : I.basis()) arr.push_back(g.str());
  return arr;
}

Json ring_to_json(const ModelPtr& A, const InputDocument& doc) {
  Json j;
  j["characteristic"] = doc.characteristic;
  j["variables"] = doc.variables;
  j["relations"] = doc.relations;
  Json w = Json::array();
  for (int64_t x : A->ring()->weights) w.push_back(x);
  j["weights"] = w;
  j["dim"] = A->dim();
  j["depth"] = A->depth();
  j["cohen_macaulay"] = A->is_cohen_macaulay();
  return j;
}

Json ideal_meta(const std::string& name, const MPrimaryIdeal& I) {
  Json j;
  j["name"] = name;
  Json gens = Json::array();
  for (const Polynomial& g : I.gens()) gens.push_back(g.str());
  j["generators"] = gens;
  j["colength"] = I.colength();
  j["adic_bound"] = I.adic_bound();
  return j;
}

Json seq_to_json(const SuperficialSequence& seq) {
  Json steps = Json::array();
  for (const auto& s : seq.steps) {
    Json e;
    e["element"] = s.element.str();
    e["seed"] = s.seed;
    Json cert;
    cert["ok"] = s.cert.ok;
    cert["n_max"] = s.cert.n_max;
    cert["onset"] = s.cert.onset;
    cert["c_used"] = s.cert.c_used;
    e["certificate"] = cert;
    steps.push_back(e);
  }
  Json j;
  j["seed"] = seq.seed;
  j["steps"] = steps;
  if (seq.cm_warning) j["warning"] = "model is not Cohen-Macaulay";
  return j;
}

Json vv_to_json(const VvModuleReport& rep, bool include_values) {
  Json j;
  j["sequence"] = seq_to_json(rep.seq);
  Json pieces = Json::array();
  for (const VvPiece& p : rep.pieces) {
    Json e;
    e["n"] = p.n;
    e["length"] = p.length;
    e["u_presentation"] = p.u_presentation;
    e["w_presentation"] = p.w_presentation;
    e["annihilator"] = p.ann.str();
    e["annihilator_verdict"] = p.ann_verdict.str();
    pieces.push_back(e);
  }
  j["pieces"] = pieces;
  j["stabilized"] = rep.stabilized;
  if (rep.stabilized) j["stabilization_degree"] = rep.stabilization_degree;
  if (include_values && rep.stabilized) {
    j["total_length"] = rep.total_length;
    j["annihilator"] = ideal_to_json(rep.annihilator);
    j["annihilator_verdict"] = rep.ann_verdict.str();
  }
  if (!rep.stabilized) j["status"] = "unstabilized";
  return j;
}

Json ar_to_json(const ArEstimate& est) {
  Json j;
  j["r"] = est.r;
  j["seed"] = est.seed;
  j["budget"] = est.budget;
  j["samples_used"] = est.samples_used;
  j["label"] = "upper estimate (contains a_r(I))";
  Json tr = Json::array();
  for (const auto& t : est.trace) {
    Json e;
    e["index"] = t.index;
    e["seed"] = t.seed;
    e["fingerprint"] = t.fingerprint;
    e["shrank"] = t.shrank;
    tr.push_back(e);
  }
  j["trace"] = tr;
  j["final_ideal"] = ideal_to_json(est.final_ideal);
  j["verdict"] = est.verdict.str();
  j["stabilization_index"] = est.stabilization_index;
  if (est.depth_g) {
    j["depth_g"] = *est.depth_g;
    if (est.depth_warning)
      j["warning"] = "depth G >= r: the unit ideal is predicted";
  }
  return j;
}

Json q_to_json(const QEstimate& q) {
  Json j;
  j["i"] = q.i;
  j["status"] = piece_status_str(q.status);
  j["support_scanned"] = Json::array({q.support_lo, q.support_hi});
  j["grading_convention"] = "veronese: (L^I)^<l> = L^{I^l}(-1)";
  if (q.any_nonzero)
    j["nonzero_support"] = Json::array({q.nonzero_lo, q.nonzero_hi});
  Json pieces = Json::array();
  for (const auto& p : q.pieces) {
    Json e;
    e["n"] = p.n;
    e["status"] = piece_status_str(p.status);
    if (p.status != PieceStatus::Unstable) {
      e["dim"] = p.dim;
      e["t_onset"] = p.t_onset;
      e["window_width"] = p.window_width;
      if (p.dim > 0) e["annihilator"] = p.ann.str();
    }
    Json dims = Json::array();
    for (uint64_t d : p.dims_by_t) dims.push_back(d);
    e["dims_by_t"] = dims;
    pieces.push_back(e);
  }
  j["pieces"] = pieces;
  if (q.status != PieceStatus::Unstable) {
    j["ideal"] = ideal_to_json(q.ideal);
    j["verdict"] = q.verdict.str();
  }
  return j;
}

struct StepOutcome {
  Json report;
  StepStatus status = StepStatus::Ok;
  std::vector<std::pair<std::string, std::string>> csv; // name -> content
};

struct Ctx {
  const RunOptions& opts;
  const InputDocument& doc;
  ModelPtr A;
  int samples() const { return opts.samples > 0 ? opts.samples : 32; }
  int verify_samples() const { return opts.samples > 0 ? opts.samples : 8; }
  SuperficialConfig scfg() const { return SuperficialConfig{}; }
  VvConfig vcfg() const {
    VvConfig c;
    if (opts.window > 0) c.zero_window = opts.window;
    return c;
  }
  ArConfig acfg(int budget) const {
    ArConfig c;
    c.samples = budget;
    if (opts.window > 0) c.stable_window = opts.window;
    return c;
  }
  LcConfig lcfg() const {
    LcConfig c;
    if (opts.nmax > 0) c.n_scan_max = opts.nmax;
    if (opts.window > 0) c.stable_window = opts.window;
    return c;
  }
  DepthStrategy strategy() const {
    if (opts.strategy == "vv") return DepthStrategy::Vv;
    if (opts.strategy == "resolution") return DepthStrategy::Resolution;
    if (opts.strategy == "both") return DepthStrategy::Both;
    throw InputError("unknown strategy \"" + opts.strategy +
                     "\" (expected vv, resolution or both)");
  }
};

StepOutcome run_gb(const Ctx& ctx, const std::string& name,
                   const MPrimaryIdeal& I) {
  StepOutcome out;
  out.report["command"] = "gb";
  out.report["ring"] = ring_to_json(ctx.A, ctx.doc);
  out.report["ideal"] = ideal_meta(name, I);
  out.report["reduced_basis"] = ideal_to_json(I.handle());
  Json leads = Json::array();
  for (const Polynomial& g : I.handle().basis())
    leads.push_back(Polynomial::monomial(g.ring(), g.lead().mon, 1).str());
  out.report["lead_monomials"] = leads;
  out.report["status"] = "ok";
  return out;
}

StepOutcome run_depth(const Ctx& ctx, const std::string& name,
                      const MPrimaryIdeal& I) {
  StepOutcome out;
  out.report["command"] = "depth-g";
  out.report["ring"] = ring_to_json(ctx.A, ctx.doc);
  out.report["ideal"] = ideal_meta(name, I);
  DepthCertificate cert =
      depth_assoc_graded(I, ctx.strategy(), ctx.opts.seed, ctx.scfg(), ctx.vcfg());
  out.report["strategy"] = cert.strategy;
  out.report["depth_g"] = cert.value;
  if (cert.vv_value >= 0) out.report["vv_value"] = cert.vv_value;
  if (cert.resolution_value >= 0)
    out.report["resolution_value"] = cert.resolution_value;
  out.report["notes"] = cert.notes;
  GradedPresentation G = assoc_graded_presentation(I);
  out.report["dim_g"] = G.g_ideal.krull_dim();
  out.report["status"] = "ok";
  return out;
}

StepOutcome run_vv(const Ctx& ctx, const std::string& name,
                   const MPrimaryIdeal& I, bool annihilator_focus) {
  StepOutcome out;
  out.report["command"] = annihilator_focus ? "ann" : "vv";
  out.report["ring"] = ring_to_json(ctx.A, ctx.doc);
  out.report["ideal"] = ideal_meta(name, I);
  out.report["r"] = ctx.opts.r;
  SuperficialSequence seq = sample_superficial_sequence(
      I, static_cast<unsigned>(ctx.opts.r), ctx.opts.seed, ctx.scfg());
  VvModuleReport rep = vv_module(seq, I, ctx.vcfg());
  out.report["vv"] = vv_to_json(rep, true);
  if (!rep.stabilized) {
    out.status = StepStatus::Unstable;
    out.report["status"] = "unstable";
  } else {
    out.report["status"] = "ok";
  }
  std::ostringstream csv;
  csv << "n,length\n";
  for (const VvPiece& p : rep.pieces) csv << p.n << "," << p.length << "\n";
  out.csv.emplace_back("table", csv.str());
  return out;
}

StepOutcome run_ar(const Ctx& ctx, const std::string& name,
                   const MPrimaryIdeal& I) {
  StepOutcome out;
  out.report["command"] = "ar";
  out.report["ring"] = ring_to_json(ctx.A, ctx.doc);
  out.report["ideal"] = ideal_meta(name, I);
  std::optional<int> depth;
  if (ctx.A->is_cohen_macaulay())
    depth = depth_assoc_graded(I, DepthStrategy::Vv, mix_seed(ctx.opts.seed, 3),
                               ctx.scfg(), ctx.vcfg())
                .value;
  ArEstimate est = ar_estimate(I, ctx.opts.r, ctx.opts.seed,
                               ctx.acfg(ctx.samples()), ctx.scfg(), ctx.vcfg(),
                               depth);
  out.report["estimate"] = ar_to_json(est);
  out.report["status"] = "ok";
  std::ostringstream csv;
  csv << "index,seed,fingerprint,shrank\n";
  for (const auto& t : est.trace)
    csv << t.index << "," << t.seed << "," << t.fingerprint << ","
        << (t.shrank ? 1 : 0) << "\n";
  out.csv.emplace_back("trace", csv.str());
  return out;
}

StepOutcome run_q(const Ctx& ctx, const std::string& name,
                  const MPrimaryIdeal& I) {
  StepOutcome out;
  out.report["command"] = "q";
  out.report["ring"] = ring_to_json(ctx.A, ctx.doc);
  out.report["ideal"] = ideal_meta(name, I);
  out.report["experimental"] = true;
  LcConfig lc = ctx.lcfg();
  int d = ctx.A->dim();
  int top = lc.n_scan_max + lc.t_max * d;
  LWindow win = make_window(I, ctx.opts.seed, top, ctx.scfg());
  Json qs = Json::array();
  bool any_unstable = false;
  std::ostringstream csv;
  csv << "i,n,status,dim\n";
  for (int i = 0; i < d; ++i) {
    QEstimate q = q_estimate(i, win, lc);
    if (q.status == PieceStatus::Unstable) any_unstable = true;
    for (const auto& p : q.pieces)
      csv << q.i << "," << p.n << "," << piece_status_str(p.status) << ","
          << (p.status == PieceStatus::Unstable ? std::string("")
                                                : std::to_string(p.dim))
          << "\n";
    qs.push_back(q_to_json(q));
  }
  out.report["q_estimates"] = qs;
  out.report["status"] = any_unstable ? "unstable" : "ok";
  if (any_unstable) out.status = StepStatus::Unstable;
  out.csv.emplace_back("pieces", csv.str());
  return out;
}

StepOutcome run_powers(const Ctx& ctx, const std::string& name,
                       const MPrimaryIdeal& I) {
  StepOutcome out;
  out.report["command"] = "powers";
  out.report["ring"] = ring_to_json(ctx.A, ctx.doc);
  out.report["ideal"] = ideal_meta(name, I);
  PowersConfig pc;
  pc.l_max = ctx.opts.l_max;
  if (ctx.opts.samples > 0) pc.ar.samples = ctx.opts.samples;
  if (ctx.opts.window > 0) {
    pc.ar.stable_window = ctx.opts.window;
    pc.lc.stable_window = ctx.opts.window;
  }
  if (ctx.opts.nmax > 0) pc.lc.n_scan_max = ctx.opts.nmax;
  PowersScanReport rep =
      powers_scan(I, ctx.opts.r, ctx.opts.seed, pc, ctx.scfg(), ctx.vcfg());
  Json entries = Json::array();
  bool any_fail = false;
  std::ostringstream csv;
  csv << "l,ok,ar_fingerprint,running_mprimary,contains_qproduct\n";
  for (const PowersEntry& e : rep.entries) {
    Json je;
    je["l"] = e.l;
    je["ok"] = e.ok;
    if (!e.ok) {
      je["error"] = e.error;
      any_fail = true;
      entries.push_back(je);
      csv << e.l << ",0,,,\n";
      continue;
    }
    je["ar"] = ar_to_json(e.ar);
    Json qj = Json::array();
    for (const QEstimate& q : e.qs) qj.push_back(q_to_json(q));
    je["q_estimates"] = qj;
    Json ver = Json::array();
    for (int v : e.veronese_ok) ver.push_back(v);
    je["veronese_ok"] = ver;
    je["running_intersection"] = ideal_to_json(e.running_intersection);
    je["running_verdict"] = e.running_verdict.str();
    je["running_contains_qproduct"] = e.running_contains_qprod;
    je["ar_equal_prev"] = e.ar_equal_prev;
    entries.push_back(je);
    csv << e.l << ",1," << ideal_fingerprint(e.ar.final_ideal) << ","
        << (e.running_verdict.kind == MPrimality::MPrimary ? 1 : 0) << ","
        << e.running_contains_qprod << "\n";
  }
  out.report["entries"] = entries;
  out.report["tail_constant"] = rep.tail_constant;
  out.report["q_max_probe"] = rep.q_max_probe;
  out.report["open_question_note"] =
      "tail behavior is reported empirically; no assertion is made";
  bool veronese_failed = false;
  for (const PowersEntry& e : rep.entries)
    for (int v : e.veronese_ok)
      if (v == 0) veronese_failed = true;
  if (any_fail || veronese_failed) {
    out.status = StepStatus::VerdictFailed;
    out.report["status"] = "failed";
  } else {
    out.report["status"] = "ok";
  }
  out.csv.emplace_back("scan", csv.str());
  return out;
}

// property battery for verify-all; one verdict row per check
StepOutcome run_verify(const Ctx& ctx, const std::string& name,
                       const MPrimaryIdeal& I) {
  StepOutcome out;
  out.report["command"] = "verify-all";
  out.report["ring"] = ring_to_json(ctx.A, ctx.doc);
  out.report["ideal"] = ideal_meta(name, I);
  Json rows = Json::array();
  bool all_ok = true;
  auto row = [&](const std::string& check, bool ok, const std::string& detail) {
    Json r;
    r["check"] = check;
    r["ok"] = ok;
    if (!detail.empty()) r["detail"] = detail;
    rows.push_back(r);
    if (!ok) all_ok = false;
  };

  if (!ctx.A->is_cohen_macaulay()) {
    out.report["skipped"] = "model is not Cohen-Macaulay; theorem checks do not apply";
    out.report["verdicts"] = rows;
    out.report["status"] = "ok";
    return out;
  }

  int d = ctx.A->dim();
  DepthCertificate depth = depth_assoc_graded(I, DepthStrategy::Both,
                                              ctx.opts.seed, ctx.scfg(), ctx.vcfg());
  row("depth-strategies-agree", true,
      "depth G = " + std::to_string(depth.value));

  GradedPresentation G = assoc_graded_presentation(I);
  row("hilbert-function-consistency", true, "checked at construction");

  for (int r = 1; r <= d; ++r) {
    SuperficialSequence seq = sample_superficial_sequence(
        I, static_cast<unsigned>(r), mix_seed(ctx.opts.seed, 100 + static_cast<uint64_t>(r)),
        ctx.scfg());
    VvModuleReport rep = vv_module(seq, I, ctx.vcfg());
    std::string tag = " (r=" + std::to_string(r) + ")";
    row("vv-stabilized" + tag, rep.stabilized, "");
    if (!rep.stabilized) continue;
    bool ann_ok = rep.ann_verdict.kind == MPrimality::Unit ||
                  rep.ann_verdict.kind == MPrimality::MPrimary;
    row("vv-annihilator-unit-or-m-primary" + tag, ann_ok, rep.ann_verdict.str());

    std::vector<Polynomial> reps;
    for (const auto& s : seq.steps) reps.push_back(combination_form(G, s.coeffs));
    RegularityCertificate reg = is_g_regular_sequence(reps, G);
    bool equiv = (rep.total_length == 0) == reg.regular;
    row("vv-zero-iff-g-regular" + tag, equiv,
        "V length " + std::to_string(rep.total_length) + ", regular " +
            (reg.regular ? "yes" : "no"));

    int top = std::max(rep.stabilization_degree + 2, 4);
    LWindow win(I, seq.elements(), top);
    win.verify_dims();
    win.verify_commutation();
    KoszulCheckReport kos = koszul_h1_check(rep, win);
    row("koszul-h1-matches-vv" + tag, kos.all_certified_agree, "");
    row("filter-regularity-tail" + tag, kos.filter_regular_ok, "");
  }

  // Hilbert-Samuel growth: strictly increasing colengths, polynomial tail
  {
    std::vector<uint64_t> cs;
    bool increasing = true;
    for (unsigned n = 1; n <= 8; ++n) {
      auto c = I.power(n).colength();
      if (!c) throw InternalError("power of m-primary ideal not m-primary");
      if (!cs.empty() && *c <= cs.back()) increasing = false;
      cs.push_back(*c);
    }
    std::vector<int64_t> diff(cs.begin(), cs.end());
    for (int k = 0; k < d + 1; ++k)
      for (size_t t = diff.size(); t-- > 1;) diff[t] -= diff[t - 1];
    bool poly_tail = true;
    for (size_t t = diff.size() - 2; t < diff.size(); ++t)
      if (diff[t] != 0) poly_tail = false;
    row("hilbert-samuel-growth", increasing && poly_tail, "");
  }
  {
    bool ok = true;
    int N = I.adic_bound();
    for (unsigned n = 2; n <= 3; ++n) {
      Ideal In = I.power(n);
      for (const Monomial& m :
           ctx.A->basis_monomials_of_degree(static_cast<uint64_t>(N) * n)) {
        if (!In.contains(Polynomial::monomial(ctx.A->ring(), m, 1))) {
          ok = false;
          break;
        }
      }
    }
    row("adic-bound-powers", ok, "");
  }

  // the main-theorem battery where depth G < r
  for (int r = 1; r <= d; ++r) {
    if (depth.value >= r) continue;
    std::string tag = " (r=" + std::to_string(r) + ")";
    ArConfig ac = ctx.acfg(ctx.verify_samples());
    RunOptions sub = ctx.opts;
    ArEstimate est = ar_estimate(I, r, mix_seed(ctx.opts.seed, 300 + static_cast<uint64_t>(r)),
                                 ac, ctx.scfg(), ctx.vcfg(), depth.value);
    bool every_mp = true;
    for (const auto& [s, ann] : est.sample_anns) {
      MPrimaryVerdict v = classify_m_primary(ctx.A, ann);
      if (v.kind != MPrimality::MPrimary) every_mp = false;
    }
    row("sampled-annihilators-m-primary" + tag, every_mp, "");
    row("ar-estimate-m-primary" + tag,
        est.verdict.kind == MPrimality::MPrimary, est.verdict.str());

    LcConfig lc = ctx.lcfg();
    int top = lc.n_scan_max + lc.t_max * r;
    LWindow win(I,
                sample_superficial_sequence(I, static_cast<unsigned>(d),
                                            mix_seed(ctx.opts.seed, 400), ctx.scfg())
                    .elements(),
                top);
    std::vector<QEstimate> qs;
    for (int i = 0; i < r; ++i) qs.push_back(q_estimate(i, win, lc));
    QProductCheck qp = q_product_check(qs, est.sample_anns, ctx.A);
    if (qp.applicable) {
      row("q-product-in-every-sample-ann" + tag, qp.all_ok, "");
      row("q-product-in-ar-estimate" + tag,
          est.final_ideal.contains(qp.product), "");
      row("q-product-m-primary" + tag,
          qp.product_verdict.kind == MPrimality::MPrimary,
          qp.product_verdict.str());
    } else {
      row("q-product-check" + tag, true, "skipped: " + qp.skip_reason);
    }
    (void)sub;
  }

  out.report["verdicts"] = rows;
  out.report["status"] = all_ok ? "ok" : "failed";
  if (!all_ok) out.status = StepStatus::VerdictFailed;
  return out;
}

} // namespace

RunResult run_corpus(const RunOptions& opts) {
  static const std::vector<std::string> commands = {
      "gb", "depth-g", "vv", "ann", "ar", "q", "powers", "verify-all"};
  if (std::find(commands.begin(), commands.end(), opts.command) == commands.end())
    throw InputError("unknown command \"" + opts.command + "\"");
  if (opts.format != "json" && opts.format != "csv" && opts.format != "both")
    throw InputError("unknown format \"" + opts.format + "\"");

  InputDocument doc = opts.doc_path.empty()
                          ? parse_document_text(opts.doc_text)
                          : parse_document_file(opts.doc_path);
  ModelPtr A = build_model(doc);
  Ctx ctx{opts, doc, A};

  auto started = std::chrono::steady_clock::now();
  RunResult result;
  Json steps = Json::array();
  bool any_verdict_fail = false, any_unstable = false, any_failed = false;

  for (const auto& [name, gens] : doc.ideals) {
    if (!opts.ideal_filter.empty() && name != opts.ideal_filter) continue;
    Json step;
    step["ideal"] = name;
    std::string fname = opts.command + "-" + name + ".json";
    step["report"] = fname;
    try {
      MPrimaryIdeal I = declare_named_ideal(A, doc, name);
      StepOutcome oc;
      if (opts.command == "gb") oc = run_gb(ctx, name, I);
      else if (opts.command == "depth-g") oc = run_depth(ctx, name, I);
      else if (opts.command == "vv") oc = run_vv(ctx, name, I, false);
      else if (opts.command == "ann") oc = run_vv(ctx, name, I, true);
      else if (opts.command == "ar") oc = run_ar(ctx, name, I);
      else if (opts.command == "q") oc = run_q(ctx, name, I);
      else if (opts.command == "powers") oc = run_powers(ctx, name, I);
      else oc = run_verify(ctx, name, I);

      oc.report["seed"] = opts.seed;
      step["status"] = step_status_str(oc.status);
      if (oc.status == StepStatus::VerdictFailed) any_verdict_fail = true;
      if (oc.status == StepStatus::Unstable) any_unstable = true;
      result.reports.emplace_back(fname, std::move(oc.report));
      if (opts.format != "json")
        for (auto& [suffix, content] : oc.csv)
          result.csv_tables.emplace_back(
              opts.command + "-" + name + "-" + suffix + ".csv", content);
    } catch (const UnstableError& e) {
      step["status"] = "unstable";
      step["error"] = e.what();
      any_unstable = true;
    } catch (const SamplingError& e) {
      step["status"] = "unstable";
      step["error"] = e.what();
      any_unstable = true;
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      step["status"] = "failed";
      step["error"] = e.what();
      any_failed = true;
    }
    steps.push_back(step);
  }
  if (steps.empty())
    throw InputError("no declared ideal matches \"" + opts.ideal_filter + "\"");

  result.exit_code = (any_failed || any_verdict_fail) ? 1 : any_unstable ? 3 : 0;

  Json config;
  config["command"] = opts.command;
  config["seed"] = opts.seed;
  config["samples"] = opts.samples;
  config["nmax"] = opts.nmax;
  config["window"] = opts.window;
  config["strategy"] = opts.strategy;
  config["format"] = opts.format;
  config["ideal_filter"] = opts.ideal_filter;
  config["r"] = opts.r;
  config["l_max"] = opts.l_max;

  std::string digest = fingerprint16(sha256_hex(doc.raw) + "|" + opts.command +
                                     "|" + canonical_dump(config));
  Json manifest;
  manifest["digest"] = digest;
  manifest["document_sha256"] = sha256_hex(doc.raw);
  manifest["config"] = config;
  manifest["versions"] = Json{{"vvlab", "0.1.0"}};
  manifest["steps"] = steps;
  manifest["exit_code"] = result.exit_code;
  auto elapsed = std::chrono::steady_clock::now() - started;
  manifest["wall_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  result.manifest = manifest;

  if (!opts.out_dir.empty()) {
    std::string dir = opts.out_dir + "/" + digest;
    ensure_directory(dir);
    for (const auto& [fname, body] : result.reports)
      atomic_write(dir + "/" + fname, canonical_dump(body));
    for (const auto& [fname, body] : result.csv_tables)
      atomic_write(dir + "/" + fname, body);
    // the manifest is the single mutable file (wall-clock changes per run)
    std::string mpath = dir + "/manifest.json";
    std::string tmp = mpath + ".tmp";
    {
      std::ofstream outf(tmp, std::ios::binary | std::ios::trunc);
      outf << canonical_dump(manifest);
    }
    std::filesystem::rename(tmp, mpath);
    result.run_dir = dir;
  }
  return result;
}

} // namespace vvlab
