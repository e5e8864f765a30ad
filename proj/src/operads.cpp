#include "operalang/operads.hpp"

#include "operalang/errors.hpp"

namespace operalang {

namespace {

void check_position(int i, int arity) {
  if (i < 1 || i > arity) {
    throw ArityError("composition position " + std::to_string(i) + " outside 1.." +
                     std::to_string(arity));
  }
}

PairSet unite(PairSet a, const PairSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

ArasRelation::ArasRelation(Relation r) : rel_(std::move(r)) {
  if (!rel_.is_order_compatible()) {
    throw InvariantError("ARAS relation requires x < y: " + to_string(rel_.pairs()));
  }
}

ArefRelation::ArefRelation(Relation r) : rel_(std::move(r)) {
  if (!rel_.is_antireflexive()) {
    throw InvariantError("ARef relation must be antireflexive: " + to_string(rel_.pairs()));
  }
}

DoubleTilde::DoubleTilde(MultiTilde left, MultiTilde right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.arity() != right_.arity()) {
    throw InvariantError("double tilde components differ in arity");
  }
}

PosetClass::PosetClass(Relation closed) : rel_(std::move(closed)) {
  if (!rel_.is_order_compatible() || !rel_.is_transitive()) {
    throw InvariantError("POSet representative must be closed with x < y: " +
                         to_string(rel_.pairs()));
  }
}

PosetClass PosetClass::of(const Relation& representative) {
  if (!representative.is_order_compatible()) {
    throw InvariantError("POSet representative requires x < y: " +
                         to_string(representative.pairs()));
  }
  return PosetClass(transitive_closure(representative));
}

QuasiOrder::QuasiOrder() : rel_(reflexive_closure(Relation())) {}

QuasiOrder::QuasiOrder(Relation r) : rel_(std::move(r)) {
  if (!rel_.is_reflexive() || !rel_.is_transitive()) {
    throw InvariantError("quasiorder must be reflexive and transitive: " +
                         to_string(rel_.pairs()));
  }
}

QuasiOrder QuasiOrder::closure_of(const Relation& r) {
  return QuasiOrder(reflexive_closure(transitive_closure(r)));
}

ArefClass ArefClass::of(const Relation& antireflexive) {
  if (!antireflexive.is_antireflexive()) {
    throw InvariantError("ARef class member must be antireflexive");
  }
  return ArefClass(strip_diagonal(transitive_closure(antireflexive)));
}

MultiTilde compose_multitilde(const MultiTilde& a, int i, const MultiTilde& b) {
  const auto r = op_compose(TildePrecomposition{}, {a.arity(), a.pairs()}, i, {b.arity(), b.pairs()});
  return MultiTilde(r.arity, r.payload);
}

Relation compose_aref(const Relation& a, int i, const Relation& b) {
  if (!a.is_antireflexive() || !b.is_antireflexive()) {
    throw InvariantError("ARef composition requires antireflexive operands");
  }
  const auto r = op_compose(ArefPrecomposition{}, {a.arity(), a.pairs()}, i, {b.arity(), b.pairs()});
  return Relation(r.arity, r.payload);
}

ArefRelation compose(const ArefRelation& a, int i, const ArefRelation& b) {
  return ArefRelation(compose_aref(a.relation(), i, b.relation()));
}

ArasRelation compose(const ArasRelation& a, int i, const ArasRelation& b) {
  const auto r = op_compose(ArasPrecomposition{}, {a.arity(), a.relation().pairs()}, i,
                            {b.arity(), b.relation().pairs()});
  return ArasRelation(Relation(r.arity, r.payload));
}

DoubleTilde compose_double(const DoubleTilde& a, int i, const DoubleTilde& b) {
  return DoubleTilde(compose_multitilde(a.left(), i, b.left()),
                     compose_multitilde(a.right(), i, b.right()));
}

QuasiOrder compose_qoset(const QuasiOrder& a, int i, const QuasiOrder& b) {
  check_position(i, a.arity());
  const int k2 = b.arity();
  PairSet joined = unite(shift_diam(i, k2, a.relation().pairs()), shift_diam(0, i, b.relation().pairs()));
  return QuasiOrder(transitive_closure(Relation(a.arity() + k2 - 1, std::move(joined))));
}

QuotientPrecomposition<ArasPrecomposition> poset_precomposition() {
  return QuotientPrecomposition<ArasPrecomposition>(ArasPrecomposition{}, &close_transitively);
}

QuotientPrecomposition<ArefPrecomposition> aref_class_precomposition() {
  return QuotientPrecomposition<ArefPrecomposition>(ArefPrecomposition{}, &close_strictly);
}

PosetClass compose_poset(const PosetClass& a, int i, const PosetClass& b) {
  const auto r = op_compose(poset_precomposition(), {a.arity(), a.relation().pairs()}, i,
                            {b.arity(), b.relation().pairs()});
  return PosetClass(Relation(r.arity, r.payload));
}

ArefClass compose_aref_class(const ArefClass& a, int i, const ArefClass& b) {
  const auto r = op_compose(aref_class_precomposition(), {a.arity(), a.representative().pairs()},
                            i, {b.arity(), b.representative().pairs()});
  return ArefClass::of(Relation(r.arity, r.payload));
}

Relation iso_zeta(const MultiTilde& t) {
  PairSet out;
  for (const auto& [x, y] : t.pairs()) out.insert({x, y + 1});
  return Relation(t.arity(), std::move(out));
}

MultiTilde iso_zeta_inv(const Relation& r) {
  if (!r.is_order_compatible()) throw InvariantError("inverse of zeta requires x < y");
  PairSet out;
  for (const auto& [x, y] : r.pairs()) out.insert({x, y - 1});
  return MultiTilde(r.arity(), std::move(out));
}

Relation iso_phi(const Relation& lower, const Relation& upper_reversed) {
  if (lower.arity() != upper_reversed.arity()) throw InvariantError("phi: arity mismatch");
  if (!lower.is_order_compatible() || !upper_reversed.is_order_compatible()) {
    throw InvariantError("phi requires two ARAS relations");
  }
  return Relation(lower.arity(), unite(lower.pairs(), reverse(upper_reversed.pairs())));
}

std::pair<Relation, Relation> iso_phi_inv(const Relation& r) {
  if (!r.is_antireflexive()) throw InvariantError("phi inverse requires an antireflexive relation");
  const Relation upper = split_upper(r);
  return {split_lower(r), Relation(r.arity(), reverse(upper.pairs()))};
}

Relation iso_xi(const DoubleTilde& d) {
  return iso_phi(iso_zeta(d.left()), iso_zeta(d.right()));
}

DoubleTilde iso_xi_inv(const Relation& r) {
  auto [lower, upper_rev] = iso_phi_inv(r);
  return DoubleTilde(iso_zeta_inv(lower), iso_zeta_inv(upper_rev));
}

ArefClass iso_eta(const QuasiOrder& q) { return ArefClass::of(strip_diagonal(q.relation())); }

QuasiOrder iso_eta_inv(const ArefClass& c) { return QuasiOrder::closure_of(c.representative()); }

OperadKind kind_of(const OperadElement& e) { return static_cast<OperadKind>(e.index()); }

int arity_of(const OperadElement& e) {
  return std::visit([](const auto& v) { return v.arity(); }, e);
}

std::string kind_name(OperadKind kind) {
  switch (kind) {
    case OperadKind::Tilde: return "tilde";
    case OperadKind::Aras: return "aras";
    case OperadKind::Aref: return "aref";
    case OperadKind::DoubleTilde: return "dt";
    case OperadKind::Poset: return "poset";
    case OperadKind::Qoset: return "qoset";
  }
  return "?";
}

OperadElement identity_element(OperadKind kind) {
  switch (kind) {
    case OperadKind::Tilde: return MultiTilde();
    case OperadKind::Aras: return ArasRelation();
    case OperadKind::Aref: return ArefRelation();
    case OperadKind::DoubleTilde: return DoubleTilde();
    case OperadKind::Poset: return PosetClass();
    case OperadKind::Qoset: return QuasiOrder();
  }
  throw InvariantError("unknown operad kind");
}

OperadElement compose(const OperadElement& a, int i, const OperadElement& b) {
  if (a.index() != b.index()) {
    throw InvariantError("cannot compose " + kind_name(kind_of(a)) + " with " +
                         kind_name(kind_of(b)));
  }
  return std::visit(
      [&](const auto& lhs) -> OperadElement {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b);
        if constexpr (std::is_same_v<T, MultiTilde>) {
          return compose_multitilde(lhs, i, rhs);
        } else if constexpr (std::is_same_v<T, DoubleTilde>) {
          return compose_double(lhs, i, rhs);
        } else if constexpr (std::is_same_v<T, PosetClass>) {
          return compose_poset(lhs, i, rhs);
        } else if constexpr (std::is_same_v<T, QuasiOrder>) {
          return compose_qoset(lhs, i, rhs);
        } else {
          return compose(lhs, i, rhs);
        }
      },
      a);
}

Relation to_aref(const OperadElement& e) {
  return std::visit(
      [](const auto& v) -> Relation {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MultiTilde>) {
          return iso_xi(DoubleTilde(v, MultiTilde(v.arity(), {})));
        } else if constexpr (std::is_same_v<T, DoubleTilde>) {
          return iso_xi(v);
        } else if constexpr (std::is_same_v<T, QuasiOrder>) {
          return strip_diagonal(v.relation());
        } else {
          return v.relation();
        }
      },
      e);
}

}  // namespace operalang
