#include "latmodel/model_structure.hpp"

#include <cassert>

#include "latmodel/enumerate.hpp"

namespace latmodel {

namespace {

void require_pair_preconditions(const ArrowSet& w, const ArrowSet& t,
                                bool t_is_transfer, const char* who) {
  if (&w.lattice() != &t.lattice())
    throw Error(ErrorKind::mixed_lattices,
                std::string("MixedLattices: ") + who);
  if (!is_wide_decomposable_subcategory(w))
    throw Error(ErrorKind::precondition_violated,
                std::string("PreconditionViolated: ") + who +
                    ": W is not a wide decomposable subcategory");
  if (t_is_transfer ? !is_transfer_system(t) : !is_cotransfer_system(t))
    throw Error(ErrorKind::precondition_violated,
                std::string("PreconditionViolated: ") + who +
                    (t_is_transfer ? ": T is not a transfer system"
                                   : ": K is not a cotransfer system"));
  if (!t.subset_of(w))
    throw Error(ErrorKind::precondition_violated,
                std::string("PreconditionViolated: ") + who +
                    ": the candidate class is not contained in W");
}

}  // namespace

bool check_pair_afw(const ArrowSet& w, const ArrowSet& t) {
  require_pair_preconditions(w, t, /*t_is_transfer=*/true, "check_pair_afw");
  return is_cotransfer_system(left_lift(t) & w);
}

bool check_pair_acw(const ArrowSet& w, const ArrowSet& k) {
  require_pair_preconditions(w, k, /*t_is_transfer=*/false, "check_pair_acw");
  return is_transfer_system(right_lift(k) & w);
}

ModelStructure assemble_model_structure(const ArrowSet& w, const ArrowSet& t) {
  require_pair_preconditions(w, t, /*t_is_transfer=*/true,
                             "assemble_model_structure");
  const ArrowSet cof = left_lift(t);
  const ArrowSet acof = cof & w;
  ClosureViolation v;
  if (cotransfer_violation(acof, &v) || composition_violation(acof, &v)) {
    const Lattice& l = w.lattice();
    throw Error(ErrorKind::not_a_model_structure,
                "NotAModelStructure: the candidate acyclic cofibrations are "
                "not a cotransfer system: '" +
                    l.label(v.member.src) + "' -> '" + l.label(v.member.tgt) +
                    "' is in the class but '" + l.label(v.missing.src) +
                    "' -> '" + l.label(v.missing.tgt) + "' is not");
  }
  // F via the oracle keeps assembly meaningful even while diagnosing; the
  // E_u formula route must agree once AC is a valid cotransfer system.
  const ArrowSet fib = right_lifters_oracle(acof);
  assert(fib == right_lift(acof));
  ModelStructure m{w, acof, cof, t, fib};
  assert(verify_model_structure(m).ok);
  return m;
}

ModelDiagnosis verify_model_structure(const ModelStructure& m) {
  const Lattice& l = m.lattice();
  auto fail = [](std::string axiom, Arrow witness) {
    return ModelDiagnosis{false, std::move(axiom), witness};
  };
  auto first_diff = [](const ArrowSet& a, const ArrowSet& b) {
    return ((a - b) | (b - a)).arrows().front();
  };

  // both weak factorization systems, via the oracle
  const WfsDiagnosis cof_afib = validate_wfs(m.cof, m.afib);
  if (!cof_afib.ok())
    return fail("(C, AF) is a weak factorization system", *cof_afib.witness);
  const WfsDiagnosis acof_fib = validate_wfs(m.acof, m.fib);
  if (!acof_fib.ok())
    return fail("(AC, F) is a weak factorization system", *acof_fib.witness);

  // inclusions
  if (!m.acof.subset_of(m.cof))
    return fail("AC is contained in C", first_diff(m.acof, m.acof & m.cof));
  if (!m.afib.subset_of(m.fib))
    return fail("AF is contained in F", first_diff(m.afib, m.afib & m.fib));

  // class equations
  if (!(m.acof == (m.cof & m.weq)))
    return fail("AC = C n W", first_diff(m.acof, m.cof & m.weq));
  if (!(m.afib == (m.fib & m.weq)))
    return fail("AF = F n W", first_diff(m.afib, m.fib & m.weq));

  // W = AF o AC by relational composition (identities implicit on each side)
  ArrowSet composed(l);
  for (int i = 0; i < l.arrow_count(); ++i) {
    const Arrow f = l.arrow_at(i);
    for (int z = 0; z < l.size(); ++z) {
      if (!l.leq(f.src, z) || !l.leq(z, f.tgt)) continue;
      const bool ac_ok = z == f.src || m.acof.contains(Arrow{f.src, z});
      const bool af_ok = z == f.tgt || m.afib.contains(Arrow{z, f.tgt});
      if (ac_ok && af_ok) {
        composed.insert_index(i);
        break;
      }
    }
  }
  if (!(m.weq == composed))
    return fail("W = AF o AC", first_diff(m.weq, composed));

  // two-out-of-three over strict triples
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      if (!l.lt(x, y)) continue;
      for (int z = 0; z < l.size(); ++z) {
        if (!l.lt(y, z)) continue;
        const int in_w = m.weq.contains(Arrow{x, y}) +
                         m.weq.contains(Arrow{y, z}) +
                         m.weq.contains(Arrow{x, z});
        if (in_w == 2)
          return fail("W satisfies two-out-of-three", Arrow{x, z});
      }
    }

  // weak equivalences are decomposable
  if (!is_decomposable(m.weq)) {
    for (const Arrow& f : m.weq.arrows())
      for (int y = 0; y < l.size(); ++y)
        if (l.lt(f.src, y) && l.lt(y, f.tgt) &&
            (!m.weq.contains(Arrow{f.src, y}) ||
             !m.weq.contains(Arrow{y, f.tgt})))
          return fail("W is decomposable", f);
  }

  return {};
}

bool satisfies_factorization_condition(const ArrowSet& q) {
  const Lattice& l = q.lattice();
  if (!is_wide_decomposable_subcategory(q))
    throw Error(ErrorKind::not_decomposable,
                "NotDecomposable: the factorization condition is defined for "
                "wide decomposable subcategories");

  const auto& covers = l.covers();
  const int c = static_cast<int>(covers.size());
  std::vector<char> pushout_good(c, 0), pullback_good(c, 0);
  for (int i = 0; i < c; ++i) {
    const Arrow f{covers[i].first, covers[i].second};
    if (!q.contains(f)) continue;
    bool po_ok = true, pb_ok = true;
    for (int z = 0; z < l.size(); ++z) {
      if (po_ok && l.leq(f.src, z)) {
        const Arrow po = l.pushout(f, z);
        if (!po.is_identity() && !q.contains(po)) po_ok = false;
      }
      if (pb_ok && l.leq(z, f.tgt)) {
        const Arrow pb = l.pullback(f, z);
        if (!pb.is_identity() && !q.contains(pb)) pb_ok = false;
      }
    }
    pushout_good[i] = po_ok;
    pullback_good[i] = pb_ok;
  }

  // per arrow of q: forward reach over pushout-good covers inside the
  // interval, backward reach over pullback-good covers; pass iff they meet
  for (const Arrow& f : q.arrows()) {
    std::vector<char> reach(l.size(), 0), coreach(l.size(), 0);
    reach[f.src] = 1;
    coreach[f.tgt] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < c; ++i) {
        const auto [u, v] = covers[i];
        if (pushout_good[i] && reach[u] && !reach[v] && l.leq(v, f.tgt)) {
          reach[v] = 1;
          grew = true;
        }
        if (pullback_good[i] && coreach[v] && !coreach[u] && l.leq(f.src, u)) {
          coreach[u] = 1;
          grew = true;
        }
      }
    }
    bool met = false;
    for (int x = 0; x < l.size() && !met; ++x) met = reach[x] && coreach[x];
    if (!met) return false;
  }
  return true;
}

bool satisfies_factorization_condition_grid(const ArrowSet& q) {
  const Lattice& l = q.lattice();
  if (!l.grid_dims())
    throw Error(ErrorKind::precondition_violated,
                "PreconditionViolated: grid fast path needs a product of two "
                "chains");
  if (!is_wide_decomposable_subcategory(q))
    throw Error(ErrorKind::not_decomposable,
                "NotDecomposable: the factorization condition is defined for "
                "wide decomposable subcategories");

  const auto& covers = l.covers();
  const int c = static_cast<int>(covers.size());
  std::vector<char> pushout_good(c, 0), pullback_good(c, 0);
  for (int i = 0; i < c; ++i) {
    const Arrow f{covers[i].first, covers[i].second};
    if (!q.contains(f)) continue;
    bool po_ok = true, pb_ok = true;
    for (int z = 0; z < l.size(); ++z) {
      if (po_ok && l.leq(f.src, z)) {
        const Arrow po = l.pushout(f, z);
        if (!po.is_identity() && !q.contains(po)) po_ok = false;
      }
      if (pb_ok && l.leq(z, f.tgt)) {
        const Arrow pb = l.pullback(f, z);
        if (!pb.is_identity() && !q.contains(pb)) pb_ok = false;
      }
    }
    pushout_good[i] = po_ok;
    pullback_good[i] = pb_ok;
  }

  for (const Arrow& f : q.arrows()) {
    const auto [si, sj] = l.grid_coord(f.src);
    const auto [ti, tj] = l.grid_coord(f.tgt);
    if (si != ti && sj != tj) continue;  // only axis-parallel arrows
    std::vector<char> reach(l.size(), 0), coreach(l.size(), 0);
    reach[f.src] = 1;
    coreach[f.tgt] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < c; ++i) {
        const auto [u, v] = covers[i];
        if (pushout_good[i] && reach[u] && !reach[v] && l.leq(v, f.tgt)) {
          reach[v] = 1;
          grew = true;
        }
        if (pullback_good[i] && coreach[v] && !coreach[u] && l.leq(f.src, u)) {
          coreach[u] = 1;
          grew = true;
        }
      }
    }
    bool met = false;
    for (int x = 0; x < l.size() && !met; ++x) met = reach[x] && coreach[x];
    if (!met) return false;
  }
  return true;
}

bool is_weak_equivalence_set(const ArrowSet& q) {
  if (!is_wide_decomposable_subcategory(q))
    throw Error(ErrorKind::not_decomposable,
                "NotDecomposable: weak equivalence sets are wide decomposable "
                "subcategories");
  const bool result = check_pair_afw(q, t_max(q));
  assert(result == satisfies_factorization_condition(q));
  return result;
}

namespace {

void require_weq(const ArrowSet& w, const char* who) {
  if (!is_weak_equivalence_set(w))
    throw Error(ErrorKind::not_weak_equivalence_set,
                std::string("NotWeakEquivalenceSet: ") + who);
}

}  // namespace

ArrowSet af_min(const ArrowSet& w) {
  require_weq(w, "af_min");
  return right_lift(k_max(w)) & w;
}

ArrowSet ac_min(const ArrowSet& w) {
  require_weq(w, "ac_min");
  return left_lift(t_max(w)) & w;
}

AfInterval af_interval(const ArrowSet& w) {
  require_weq(w, "af_interval");
  const ArrowSet lo = af_min(w);
  const ArrowSet hi = t_max(w);

  EnumerationRequest req{&w.lattice(), EnumerationKind::transfer, hi, lo};
  AfInterval out{w, lo, hi, enumerate_transfer_systems(req)};
  for (const ArrowSet& t : out.members)
    if (!check_pair_afw(w, t))
      throw Error(ErrorKind::internal,
                  "InternalError: interval member fails the acyclic-fibration "
                  "check; this contradicts the interval theorem");
  return out;
}

ArrowSet dual_map(const ArrowSet& w, const ArrowSet& t) {
  require_weq(w, "dual_map");
  if (!is_transfer_system(t) || !t.subset_of(w) ||
      !af_min(w).subset_of(t) || !t.subset_of(t_max(w)))
    throw Error(ErrorKind::not_in_afw,
                "NotInAFW: the transfer system is not between af_min and "
                "af_max for this weak equivalence set");
  return left_lift(t) & w;
}

}  // namespace latmodel
