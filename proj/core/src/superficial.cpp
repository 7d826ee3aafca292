#include "vvlab/superficial.hpp"

#include <sstream>

#include "vvlab/errors.hpp"
#include "vvlab/rng.hpp"

namespace vvlab {

std::string SuperficialSequence::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < steps.size(); ++i) {
    if (i) os << "; ";
    os << steps[i].element.str();
  }
  os << "]";
  return os.str();
}

Ideal SharedLadder::at(unsigned n) {
  std::lock_guard<std::mutex> lock(mu_);
  if (steps_.empty()) {
    steps_.push_back(Ideal::unit(I_.model()->ring()));
    steps_.push_back(I_.handle());
  }
  while (steps_.size() <= n) {
    std::vector<Polynomial> gens;
    for (const Polynomial& a : steps_.back().basis())
      for (const Polynomial& b : I_.handle().basis()) gens.push_back(a * b);
    for (const Polynomial& rel : I_.model()->relations().gens())
      gens.push_back(rel);
    steps_.push_back(Ideal(I_.model()->ring(), std::move(gens)));
  }
  return steps_[n];
}

std::vector<Ideal> power_ladder(const MPrimaryIdeal& I, unsigned top,
                                const std::vector<Polynomial>& extra,
                                const LadderPtr& base) {
  const ModelPtr& A = I.model();
  std::vector<Ideal> ladder;
  ladder.reserve(top + 1);
  if (extra.empty() && base) {
    for (unsigned n = 0; n <= top; ++n) ladder.push_back(base->at(n));
    return ladder;
  }
  ladder.push_back(Ideal::unit(A->ring()));
  if (top == 0) return ladder;
  std::vector<Polynomial> g1 = I.handle().gens();
  g1.insert(g1.end(), extra.begin(), extra.end());
  ladder.push_back(Ideal(A->ring(), std::move(g1)));
  for (unsigned n = 2; n <= top; ++n) {
    std::vector<Polynomial> gens;
    // the base ladder provides I^n + J; extras join on top
    if (base) {
      gens = base->at(n).gens();
    } else {
      for (const Polynomial& a : ladder.back().basis())
        for (const Polynomial& b : I.handle().basis()) gens.push_back(a * b);
      for (const Polynomial& rel : A->relations().gens()) gens.push_back(rel);
    }
    gens.insert(gens.end(), extra.begin(), extra.end());
    ladder.push_back(Ideal(A->ring(), std::move(gens)));
  }
  return ladder;
}

bool is_nonzerodivisor(const ModelPtr& A, const Polynomial& x) {
  if (A->reduce(x).is_zero()) return false;
  Ideal J = A->relations();
  if (J.is_zero_ideal()) return true;
  return ideal_colon(J, x).same_ideal(J);
}

namespace {

bool contained(const Ideal& inner, const Ideal& outer) {
  return outer.contains(inner);
}

// first index o such that flags[n] holds for every n in [o, n_max]
int tail_onset(const std::vector<bool>& eq, int n_max) {
  int onset = n_max + 1;
  for (int n = n_max; n >= 1 && eq[static_cast<size_t>(n)]; --n) onset = n;
  return onset;
}

} // namespace

VerifyOutcome verify_superficial_full(const Polynomial& x,
                                      const MPrimaryIdeal& I,
                                      const std::vector<Polynomial>& extra,
                                      const SuperficialConfig& cfg,
                                      const LadderPtr& base) {
  const ModelPtr& A = I.model();
  require_same_ring(A->ring(), x.ring());
  VerifyOutcome out;
  SuperficialCertificate& cert = out.cert;
  int N = I.adic_bound();
  int n_max = 2 * N + 6;
  cert.n_max = n_max;

  std::vector<Ideal> P =
      power_ladder(I, static_cast<unsigned>(n_max) + 1, extra, base);
  if (P[2].contains(x))
    throw PreconditionError("candidate lies in I^2; not superficial material");

  // colon ladder (I^{n+1} : x); the containment I^n <= (I^{n+1} : x) is
  // automatic, so equality is a one-sided membership check
  auto colons = std::make_shared<std::vector<Ideal>>(
      static_cast<size_t>(n_max) + 1, Ideal());
  std::vector<bool> eq(static_cast<size_t>(n_max) + 1, false);
  for (int n = 1; n <= n_max; ++n) {
    Ideal cn = ideal_colon(P[static_cast<size_t>(n) + 1], x);
    eq[static_cast<size_t>(n)] = contained(cn, P[static_cast<size_t>(n)]);
    (*colons)[static_cast<size_t>(n)] = std::move(cn);
  }
  out.colons = colons;
  int onset = tail_onset(eq, n_max);
  if (onset <= n_max - cfg.tail_min + 1) {
    cert.ok = true;
    cert.onset = onset;
    cert.c_used = 0;
    return out;
  }

  // general form: ((I^{n+1} : x) cap I^c) = I^n
  for (int c = 1; c <= N; ++c) {
    std::vector<bool> eqc(static_cast<size_t>(n_max) + 1, false);
    for (int n = 1; n <= n_max; ++n) {
      Ideal cut = ideal_intersect((*colons)[static_cast<size_t>(n)],
                                  P[static_cast<size_t>(c)]);
      eqc[static_cast<size_t>(n)] = contained(cut, P[static_cast<size_t>(n)]);
    }
    int o = tail_onset(eqc, n_max);
    if (o <= n_max - cfg.tail_min + 1) {
      cert.ok = true;
      cert.onset = o;
      cert.c_used = c;
      return out;
    }
  }

  cert.ok = false;
  std::ostringstream os;
  os << "equality never stabilized in degrees [1," << n_max << "];";
  for (int n = 1; n <= n_max; ++n) {
    if (eq[static_cast<size_t>(n)]) continue;
    os << " (I^" << (n + 1)
       << ":x)=" << (*colons)[static_cast<size_t>(n)].str() << " vs I^" << n;
    break; // first offending colon is enough for the certificate
  }
  cert.failure = os.str();
  return out;
}

SuperficialCertificate verify_superficial(const Polynomial& x,
                                          const MPrimaryIdeal& I,
                                          const std::vector<Polynomial>& extra,
                                          const SuperficialConfig& cfg) {
  return verify_superficial_full(x, I, extra, cfg).cert;
}

SuperficialSequence sample_superficial_sequence(const MPrimaryIdeal& I,
                                                unsigned r, uint64_t seed,
                                                const SuperficialConfig& cfg,
                                                const LadderPtr& base) {
  const ModelPtr& A = I.model();
  if (r == 0) throw PreconditionError("sequence length must be positive");
  if (static_cast<int>(r) > A->dim())
    throw PreconditionError("sequence length exceeds dim A");

  SuperficialSequence out;
  out.seed = seed;
  out.cm_warning = !A->is_cohen_macaulay();
  std::vector<Polynomial> extra;
  const std::vector<Polynomial>& f = I.gens();
  uint64_t p = A->p();

  for (unsigned step = 0; step < r; ++step) {
    bool found = false;
    std::ostringstream failures;
    Ideal square = power_ladder(I, 2, extra, base)[2];
    for (int attempt = 0; attempt < cfg.resample_cap && !found; ++attempt) {
      uint64_t sub = mix_seed(seed, step * 131071ull + static_cast<uint64_t>(attempt));
      Rng rng(sub);
      std::vector<uint64_t> coeffs;
      Polynomial x = Polynomial::zero(A->ring());
      for (const Polynomial& fj : f) {
        uint64_t c = rng.below(p);
        coeffs.push_back(c);
        if (c) x = x + fj.scaled(c);
      }
      if (x.is_zero()) continue;
      // precondition filter: reject candidates falling in I^2 (mod prior steps)
      if (square.contains(x)) continue;
      VerifyOutcome vo = verify_superficial_full(x, I, extra, cfg, base);
      if (vo.cert.ok) {
        out.steps.push_back(
            SuperficialCandidate{x, coeffs, vo.cert, sub, vo.colons});
        extra.push_back(x);
        found = true;
      } else {
        failures << " [seed " << sub << ": " << vo.cert.failure << "]";
      }
    }
    if (!found)
      throw SamplingError("superficial sampling failed at step " +
                          std::to_string(step + 1) + " after " +
                          std::to_string(cfg.resample_cap) + " attempts:" +
                          failures.str());
  }
  return out;
}

} // namespace vvlab
