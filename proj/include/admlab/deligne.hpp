#pragma once

#include "admlab/polygd.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace admlab {

/// Where a class lives: the base S, the curve X over S, or the fibred square X ×_S X.
enum class Space { Base, Curve, Square };

enum class AtomKind {
  // base
  Named,        // λ, Δ_S, Φ, E, ⟨ω,ω⟩ of the dualizing sheaf
  Slack,        // opaque non-negative remainder (eff / nef)
  Pair,         // π_*⟨a, b⟩ that no rule reduces
  SectionPull,  // x^*a
  ThetaPull,    // ι_M^*Θ for a fibre-degree-0 class M on X
  // curve
  Omega,
  Alpha,
  Section,  // O(x)
  PiPull,   // π^*B
  // square
  Diagonal,  // O(Δ)
  Pr1,       // p1^*L
  Pr2,       // p2^*L
  PiPiPull,  // (π,π)^*B
  // any space
  Push,  // unevaluated push-forward of a pairing
};

enum class PushMap {
  Pi,    // π_*⟨L1, L2⟩, X → S
  P1,    // p1_*⟨M1, M2⟩, X² → X
  PiPi,  // (π,π)_*⟨M1, M2, M3⟩, X² → S
};

class Expr;
struct AtomNode;

/// Immutable atom, ordered by its canonical text.
class Atom {
 public:
  AtomKind kind() const;
  Space space() const;
  const std::string& key() const;
  const AtomNode& node() const { return *node_; }

  friend bool operator==(const Atom& a, const Atom& b) { return a.key() == b.key(); }
  friend bool operator<(const Atom& a, const Atom& b) { return a.key() < b.key(); }

  static Atom make(AtomNode node);

 private:
  std::shared_ptr<const AtomNode> node_;
};

/// Formal combination of atoms of one space with PolyGD coefficients.
class Expr {
 public:
  explicit Expr(Space space) : space_(space) {}
  Expr(Space space, const Atom& atom, PolyGD coefficient = PolyGD(1));

  Space space() const { return space_; }
  const std::map<Atom, PolyGD>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the atom whose canonical text is `key` (0 if absent).
  PolyGD coefficient(std::string_view key) const;

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const PolyGD& c);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const PolyGD& c, Expr e) { return e *= c; }
  Expr operator-() const;
  friend bool operator==(const Expr& a, const Expr& b) { return a.space_ == b.space_ && a.terms_ == b.terms_; }

  /// Per-atom values at a point (g, d).
  std::map<std::string, Rational> evaluate(const Rational& g, const Rational& d) const;

  std::string to_string() const;

 private:
  Space space_;
  std::map<Atom, PolyGD> terms_;
};

struct AtomNode {
  AtomKind kind;
  std::string name;                // Named, Slack
  std::vector<Atom> atoms;         // arguments of Pair, SectionPull, PiPull, Pr1, Pr2, PiPiPull
  std::vector<Expr> exprs;         // ThetaPull: the class M; Push: the paired classes
  PushMap map = PushMap::Pi;       // Push only
  std::string key;                 // canonical text, filled by Atom::make
};

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownAtomError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Names accepted by base(): lambda, Delta_S, Phi, E, W (the dualizing-sheaf ⟨ω,ω⟩).
Expr base(std::string_view name);
/// Opaque non-negative remainder with the given label.
Expr slack(std::string_view label);
Expr omega();
Expr alpha();
Expr section();
Expr diagonal();
/// π^*B for a base class.
Expr pi_star(const Expr& b);
/// p1^*L, p2^*L for a curve class.
Expr pr1(const Expr& l);
Expr pr2(const Expr& l);
/// ι_M^*Θ; M must be a curve class of fibre degree 0 once normalized.
Expr theta_pullback(const Expr& m);

/// Unevaluated push-forward of a pairing. The number of arguments must be 2 for π and p1
/// and 3 for (π,π), and every argument must live on the source space.
Expr pairing(PushMap map, std::vector<Expr> args);

/// Rule applications in order of first use, with counts.
struct Trace {
  std::vector<std::pair<std::string, long>> rules;
  void record(const std::string& rule);
};

/// Rewrites to a PolyGD combination of irreducible atoms: pullbacks are distributed,
/// pairings are pushed forward by the rule list, ι^*Θ is traded for −π_*⟨M, M⟩.
Expr normalize(const Expr& e, Trace* trace = nullptr);

/// Fibre degree over the base (curve classes) or over the first factor (square classes).
PolyGD fiber_degree(const Expr& e);

/// Replaces α by `alpha_value` (a curve class) and d by `d_value`, then normalizes.
Expr substitute(const Expr& e, const Expr& alpha_value, const PolyGD& d_value, Trace* trace = nullptr);

// ---------------------------------------------------------------------------
// Identity catalog

struct IdentityResult {
  std::string name;
  std::string statement;
  bool holds = false;
  Expr lhs{Space::Base};  // normal form of the derived side
  Expr rhs{Space::Base};  // normal form of the expected side
  Trace trace;
  std::vector<std::string> notes;
};

/// Catalog names in a fixed order.
const std::vector<std::string>& identity_names();

/// Throws std::invalid_argument for an unknown name.
IdentityResult verify_identity(std::string_view name);

/// Fraction-free elimination of `eliminate` (in order) from linear relations `rel = 0`;
/// each step needs a relation in which the atom has a constant coefficient. Returns the
/// single relation that remains.
Expr eliminate(std::vector<Expr> relations, const std::vector<std::string>& eliminate);

}  // namespace admlab
