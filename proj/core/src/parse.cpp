#include "vvlab/parse.hpp"

#include <cctype>

#include "vvlab/errors.hpp"

namespace vvlab {

namespace {

struct Scanner {
  const std::string& text;
  const RingPtr& ring;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw InputError("polynomial parse error at position " +
                     std::to_string(pos) + " in \"" + text + "\": " + what);
  }

  uint64_t integer(bool reduce_mod_p) {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<uint64_t>(text[pos] - '0');
      if (reduce_mod_p) v %= ring->p;
      if (!reduce_mod_p && v > 1000000) fail("integer too large");
      ++pos;
    }
    return v;
  }

  // longest declared variable name starting at pos, or -1
  int match_variable() {
    skip_ws();
    int best = -1;
    size_t best_len = 0;
    for (size_t v = 0; v < ring->var_names.size(); ++v) {
      const std::string& name = ring->var_names[v];
      if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
        best = static_cast<int>(v);
        best_len = name.size();
      }
    }
    if (best >= 0) pos += best_len;
    return best;
  }

  // coefficient and/or variable powers glued by optional '*'
  Polynomial term() {
    uint64_t coeff = 1;
    Monomial mon(ring->nvars());
    bool saw_factor = false;
    for (;;) {
      char c = peek();
      if (c == '\0' || c == '+' || c == '-') break;
      if (c == '*') {
        if (!saw_factor) fail("unexpected '*'");
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = (coeff * integer(true)) % ring->p;
        saw_factor = true;
        continue;
      }
      int v = match_variable();
      if (v < 0) fail("unknown symbol");
      Exp e = 1;
      if (peek() == '^') {
        ++pos;
        uint64_t raw = integer(false);
        if (raw > 100000) fail("exponent too large");
        e = static_cast<Exp>(raw);
      }
      mon.e[static_cast<size_t>(v)] += e;
      saw_factor = true;
    }
    if (!saw_factor) fail("expected a term");
    return Polynomial::monomial(ring, std::move(mon), coeff);
  }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Scanner sc{text, ring};
  Polynomial acc = Polynomial::zero(ring);
  bool negate = false;
  if (sc.peek() == '-') {
    negate = true;
    ++sc.pos;
  } else if (sc.peek() == '+') {
    ++sc.pos;
  }
  for (;;) {
    Polynomial t = sc.term();
    acc = negate ? acc - t : acc + t;
    if (sc.done()) break;
    char c = sc.peek();
    if (c == '+')
      negate = false;
    else if (c == '-')
      negate = true;
    else
      sc.fail("expected '+' or '-'");
    ++sc.pos;
  }
  return acc;
}

} // namespace vvlab
