#include "vvlab/experiments.hpp"

#include <future>
#include <sstream>

#include "vvlab/errors.hpp"
#include "vvlab/rng.hpp"
#include "vvlab/sha256.hpp"

namespace vvlab {

std::string ideal_fingerprint(const Ideal& I) {
  return fingerprint16(I.str());
}

ArEstimate ar_estimate(const MPrimaryIdeal& I, int r, uint64_t seed,
                       const ArConfig& cfg, const SuperficialConfig& scfg,
                       const VvConfig& vcfg, std::optional<int> depth_hint) {
  const ModelPtr& A = I.model();
  if (r < 1 || r > A->dim())
    throw PreconditionError("r must lie in [1, dim A]");

  ArEstimate est;
  est.r = r;
  est.seed = seed;
  est.budget = cfg.samples;
  est.depth_g = depth_hint;
  est.depth_warning = depth_hint && *depth_hint >= r;

  LadderPtr base = std::make_shared<SharedLadder>(I);
  auto one_sample = [&](int index) -> std::pair<uint64_t, Ideal> {
    uint64_t s = mix_seed(seed, 50000ull + static_cast<uint64_t>(index));
    SuperficialSequence seq =
        sample_superficial_sequence(I, static_cast<unsigned>(r), s, scfg, base);
    VvModuleReport rep = vv_module(seq, I, vcfg, base);
    return {s, vv_annihilator(rep)}; // throws UnstableError with the seed
  };

  Ideal acc = Ideal::unit(A->ring());
  int non_shrink = 0;
  int index = 0;
  while (index < cfg.samples) {
    int chunk = std::min(cfg.samples - index,
                         std::max(1, cfg.stable_window / 2));
    std::vector<std::pair<uint64_t, Ideal>> results;
    if (cfg.parallel && chunk > 1) {
      std::vector<std::future<std::pair<uint64_t, Ideal>>> futs;
      for (int k = 0; k < chunk; ++k)
        futs.push_back(std::async(std::launch::async, one_sample, index + k));
      for (auto& f : futs) results.push_back(f.get());
    } else {
      for (int k = 0; k < chunk; ++k) results.push_back(one_sample(index + k));
    }
    for (int k = 0; k < chunk; ++k) {
      auto& [s, ann] = results[static_cast<size_t>(k)];
      Ideal next = ideal_intersect(acc, ann);
      bool shrank = !next.same_ideal(acc);
      if (!ann.contains(next))
        throw InternalError("intersection escaped a sampled annihilator");
      acc = next;
      est.sample_anns.emplace_back(s, ann);
      est.trace.push_back(ArTraceEntry{index + k, s, ideal_fingerprint(acc), shrank});
      non_shrink = shrank ? 0 : non_shrink + 1;
      if (non_shrink >= cfg.stable_window && est.stabilization_index < 0)
        est.stabilization_index = index + k - cfg.stable_window + 1;
    }
    index += chunk;
    if (est.stabilization_index >= 0) break;
  }
  est.samples_used = index;
  est.final_ideal = acc;
  est.verdict = classify_m_primary(A, acc);
  return est;
}

LWindow make_window(const MPrimaryIdeal& I, uint64_t seed, int n_top,
                    const SuperficialConfig& scfg) {
  const ModelPtr& A = I.model();
  SuperficialSequence seq = sample_superficial_sequence(
      I, static_cast<unsigned>(A->dim()), seed, scfg);
  return LWindow(I, seq.elements(), n_top);
}

namespace {

std::string compare_family(const std::vector<std::pair<int, Ideal>>& family) {
  // unique maximal element by inclusion, when one exists in the scanned range
  if (family.empty()) return "empty family";
  size_t best = 0;
  for (size_t k = 1; k < family.size(); ++k)
    if (family[k].second.contains(family[best].second)) best = k;
  for (size_t k = 0; k < family.size(); ++k)
    if (!family[best].second.contains(family[k].second))
      return "no unique maximal element within the scanned range";
  std::ostringstream os;
  os << "maximal element attained at l=" << family[best].first;
  int first_attain = family[best].first;
  for (size_t k = 0; k < family.size(); ++k)
    if (family[k].second.same_ideal(family[best].second)) {
      first_attain = family[k].first;
      break;
    }
  if (first_attain != family[best].first)
    os << " (first attained at l=" << first_attain << ")";
  return os.str();
}

} // namespace

PowersScanReport powers_scan(const MPrimaryIdeal& I, int r, uint64_t seed,
                             const PowersConfig& cfg,
                             const SuperficialConfig& scfg, const VvConfig& vcfg) {
  if (cfg.l_max < 2) throw PreconditionError("powers scan needs l_max >= 2");
  const ModelPtr& A = I.model();
  PowersScanReport rep;
  rep.r = r;
  rep.l_max = cfg.l_max;
  rep.seed = seed;

  // base q-estimates for the Veronese and containment verdicts
  std::vector<QEstimate> base_qs;
  Ideal base_qprod;
  bool base_q_ok = false;
  if (cfg.with_q) {
    int top = cfg.lc.n_scan_max + cfg.lc.t_max * r;
    LWindow win = make_window(I, mix_seed(seed, 99), top, scfg);
    base_q_ok = true;
    for (int i = 0; i < r; ++i) {
      QEstimate q = q_estimate(i, win, cfg.lc);
      if (q.status == PieceStatus::Unstable) base_q_ok = false;
      base_qs.push_back(std::move(q));
    }
    if (base_q_ok) {
      Ideal prod = Ideal::unit(A->ring());
      for (const QEstimate& q : base_qs) prod = ideal_product(prod, q.ideal);
      base_qprod = ideal_sum(prod, A->relations().gens());
    }
  }

  Ideal running;
  bool have_running = false;
  Ideal prev_ar;
  bool have_prev = false;
  std::vector<std::vector<std::pair<int, Ideal>>> q_families(
      static_cast<size_t>(r));

  for (int l = 1; l <= cfg.l_max; ++l) {
    PowersEntry entry;
    entry.l = l;
    try {
      // declared fresh so every validation and cache re-runs
      MPrimaryIdeal Il = MPrimaryIdeal::declare(A, I.power(static_cast<unsigned>(l)).gens());
      entry.ar = ar_estimate(Il, r, mix_seed(seed, 1000 + static_cast<uint64_t>(l)),
                             cfg.ar, scfg, vcfg);
      if (cfg.with_q) {
        int top = cfg.lc.n_scan_max + cfg.lc.t_max * r;
        LWindow win =
            make_window(Il, mix_seed(seed, 2000 + static_cast<uint64_t>(l)), top, scfg);
        for (int i = 0; i < r; ++i) {
          QEstimate q = q_estimate(i, win, cfg.lc);
          if (q.status != PieceStatus::Unstable &&
              static_cast<size_t>(i) < base_qs.size() &&
              base_qs[static_cast<size_t>(i)].status != PieceStatus::Unstable) {
            entry.veronese_ok.push_back(
                q.ideal.contains(base_qs[static_cast<size_t>(i)].ideal) ? 1 : 0);
            q_families[static_cast<size_t>(i)].emplace_back(l, q.ideal);
          } else {
            entry.veronese_ok.push_back(-1);
          }
          entry.qs.push_back(std::move(q));
        }
      }
      running = have_running ? ideal_intersect(running, entry.ar.final_ideal)
                             : entry.ar.final_ideal;
      have_running = true;
      entry.running_intersection = running;
      entry.running_verdict = classify_m_primary(A, running);
      if (base_q_ok)
        entry.running_contains_qprod = running.contains(base_qprod) ? 1 : 0;
      if (have_prev)
        entry.ar_equal_prev = entry.ar.final_ideal.same_ideal(prev_ar) ? 1 : 0;
      prev_ar = entry.ar.final_ideal;
      have_prev = true;
      entry.ok = true;
    } catch (const Error& e) {
      entry.ok = false;
      entry.error = e.what();
    }
    rep.entries.push_back(std::move(entry));
  }

  size_t n = rep.entries.size();
  rep.tail_constant = n >= 2 && rep.entries[n - 1].ok && rep.entries[n - 2].ok &&
                      rep.entries[n - 1].ar_equal_prev == 1;
  for (int i = 0; i < r && cfg.with_q; ++i)
    rep.q_max_probe.push_back(
        "q_" + std::to_string(i) + ": " +
        compare_family(q_families[static_cast<size_t>(i)]));
  return rep;
}

} // namespace vvlab
