#pragma once

// The concrete operads: multi-tildes, ARAS, ARef, double multi-tildes,
// POSet (closure classes of ARAS) and quasiorders, with the isomorphisms
// between them.

#include <compare>
#include <string>
#include <variant>

#include "operalang/precomposition.hpp"
#include "operalang/relation.hpp"

namespace operalang {

/// Antireflexive relation with every pair x < y.
class ArasRelation {
 public:
  ArasRelation() = default;
  explicit ArasRelation(Relation r);

  const Relation& relation() const noexcept { return rel_; }
  int arity() const noexcept { return rel_.arity(); }

  friend auto operator<=>(const ArasRelation&, const ArasRelation&) = default;

 private:
  Relation rel_;
};

/// Antireflexive relation on {1, ..., k+1}.
class ArefRelation {
 public:
  ArefRelation() = default;
  explicit ArefRelation(Relation r);

  const Relation& relation() const noexcept { return rel_; }
  int arity() const noexcept { return rel_.arity(); }

  friend auto operator<=>(const ArefRelation&, const ArefRelation&) = default;

 private:
  Relation rel_;
};

/// A pair of multi-tildes of equal arity (left, right).
class DoubleTilde {
 public:
  DoubleTilde() = default;
  DoubleTilde(MultiTilde left, MultiTilde right);

  const MultiTilde& left() const noexcept { return left_; }
  const MultiTilde& right() const noexcept { return right_; }
  int arity() const noexcept { return left_.arity(); }

  friend auto operator<=>(const DoubleTilde&, const DoubleTilde&) = default;

 private:
  MultiTilde left_;
  MultiTilde right_;
};

/// A POSet element, stored as the transitively closed x < y representative
/// of its closure class.
class PosetClass {
 public:
  PosetClass() = default;
  /// Requires an already closed, order-compatible relation.
  explicit PosetClass(Relation closed);
  /// Class of any order-compatible relation.
  static PosetClass of(const Relation& representative);

  const Relation& relation() const noexcept { return rel_; }
  int arity() const noexcept { return rel_.arity(); }

  friend auto operator<=>(const PosetClass&, const PosetClass&) = default;

 private:
  Relation rel_;
};

/// Reflexive transitive relation on {1, ..., k+1}, stored in full.
class QuasiOrder {
 public:
  QuasiOrder();
  explicit QuasiOrder(Relation r);
  /// Smallest quasiorder containing r (reflexive-transitive closure).
  static QuasiOrder closure_of(const Relation& r);

  const Relation& relation() const noexcept { return rel_; }
  int arity() const noexcept { return rel_.arity(); }

  friend auto operator<=>(const QuasiOrder&, const QuasiOrder&) = default;

 private:
  Relation rel_;
};

/// An element of ARef modulo transitive closure, represented by the strict
/// closure (transitive closure minus the diagonal) of any member.
class ArefClass {
 public:
  ArefClass() = default;
  static ArefClass of(const Relation& antireflexive);

  const Relation& representative() const noexcept { return rel_; }
  int arity() const noexcept { return rel_.arity(); }

  friend auto operator<=>(const ArefClass&, const ArefClass&) = default;

 private:
  explicit ArefClass(Relation closed) : rel_(std::move(closed)) {}
  Relation rel_;
};

// Partial compositions. Each throws ArityError when i is outside 1..a.arity.

MultiTilde compose_multitilde(const MultiTilde& a, int i, const MultiTilde& b);
/// Requires antireflexive inputs (InvariantError otherwise).
Relation compose_aref(const Relation& a, int i, const Relation& b);
ArefRelation compose(const ArefRelation& a, int i, const ArefRelation& b);
ArasRelation compose(const ArasRelation& a, int i, const ArasRelation& b);
DoubleTilde compose_double(const DoubleTilde& a, int i, const DoubleTilde& b);
/// Q ◇̇_i Q' = γ(∇_{i,k'}(Q) ∪ ∇_{0,i}(Q')).
QuasiOrder compose_qoset(const QuasiOrder& a, int i, const QuasiOrder& b);
/// Compose ARAS representatives, then close.
PosetClass compose_poset(const PosetClass& a, int i, const PosetClass& b);
ArefClass compose_aref_class(const ArefClass& a, int i, const ArefClass& b);

/// The precomposition on ARAS closure classes.
QuotientPrecomposition<ArasPrecomposition> poset_precomposition();
/// The precomposition on ARef closure classes.
QuotientPrecomposition<ArefPrecomposition> aref_class_precomposition();

// Isomorphisms.

/// ζ^A: {(x, y+1)} on every tilde; lands in ARAS.
Relation iso_zeta(const MultiTilde& t);
/// Inverse of ζ^A; requires an order-compatible relation.
MultiTilde iso_zeta_inv(const Relation& r);
/// Φ(R1, R2) = R1 ∪ rev(R2) for two ARAS relations of equal arity.
Relation iso_phi(const Relation& lower, const Relation& upper_reversed);
/// Φ^{-1}(R) = (R^<, rev(R^>)).
std::pair<Relation, Relation> iso_phi_inv(const Relation& r);
/// ξ(T1, T2) = ζ^A(T1) ∪ rev(ζ^A(T2)).
Relation iso_xi(const DoubleTilde& d);
/// Inverse of ξ; throws InvariantError on a non-antireflexive input.
DoubleTilde iso_xi_inv(const Relation& r);
/// η(Q) = [Q \ Δ].
ArefClass iso_eta(const QuasiOrder& q);
/// η^{-1}([R]) = reflexive-transitive closure of R.
QuasiOrder iso_eta_inv(const ArefClass& c);

// Uniform wrapper.

enum class OperadKind { Tilde, Aras, Aref, DoubleTilde, Poset, Qoset };

using OperadElement =
    std::variant<MultiTilde, ArasRelation, ArefRelation, DoubleTilde, PosetClass, QuasiOrder>;

OperadKind kind_of(const OperadElement& e);
int arity_of(const OperadElement& e);
/// Literal keyword: tilde, aras, aref, dt, poset, qoset.
std::string kind_name(OperadKind kind);
/// The unit of the given operad (arity 1).
OperadElement identity_element(OperadKind kind);
/// Dispatches by tag; throws InvariantError when the tags differ.
OperadElement compose(const OperadElement& a, int i, const OperadElement& b);

/// The ARef relation whose automaton denotes the same action: multi-tildes
/// via ξ(T, ∅), double tildes via ξ, quasiorders with the diagonal stripped.
Relation to_aref(const OperadElement& e);

}  // namespace operalang
