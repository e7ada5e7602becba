#include "latmodel/lifting.hpp"

#include <cassert>

namespace latmodel {

bool lifts_against(const Lattice& l, Arrow i, Arrow p) {
  if (!l.leq(i.src, p.src) || !l.leq(i.tgt, p.tgt)) return true;  // no square
  return l.leq(i.tgt, p.src);
}

ArrowSet left_lifters_oracle(const ArrowSet& s) {
  const Lattice& l = s.lattice();
  ArrowSet r(l);
  const auto members = s.arrows();
  for (int i = 0; i < l.arrow_count(); ++i) {
    const Arrow f = l.arrow_at(i);
    bool all = true;
    for (const Arrow& g : members)
      if (!lifts_against(l, f, g)) {
        all = false;
        break;
      }
    if (all) r.insert_index(i);
  }
  return r;
}

ArrowSet right_lifters_oracle(const ArrowSet& s) {
  const Lattice& l = s.lattice();
  ArrowSet r(l);
  const auto members = s.arrows();
  for (int i = 0; i < l.arrow_count(); ++i) {
    const Arrow f = l.arrow_at(i);
    bool all = true;
    for (const Arrow& g : members)
      if (!lifts_against(l, g, f)) {
        all = false;
        break;
      }
    if (all) r.insert_index(i);
  }
  return r;
}

ArrowSet downward_extension(const ArrowSet& t) {
  const Lattice& l = t.lattice();
  ArrowSet r(l);
  for (const Arrow& f : t.arrows())
    for (int z = 0; z < l.size(); ++z)
      if (l.leq(z, f.src)) r.insert(Arrow{z, f.tgt});
  return r;
}

ArrowSet upward_extension(const ArrowSet& k) {
  const Lattice& l = k.lattice();
  ArrowSet r(l);
  for (const Arrow& f : k.arrows())
    for (int y = 0; y < l.size(); ++y)
      if (l.leq(f.tgt, y)) r.insert(Arrow{f.src, y});
  return r;
}

ArrowSet left_lift(const ArrowSet& t) {
  if (!is_transfer_system(t))
    throw Error(ErrorKind::not_transfer_system,
                "NotTransferSystem: left_lift expects a transfer system");
  ArrowSet r = downward_extension(t).complement();
  assert(r == left_lifters_oracle(t));
  return r;
}

ArrowSet right_lift(const ArrowSet& k) {
  if (!is_cotransfer_system(k))
    throw Error(ErrorKind::not_cotransfer_system,
                "NotCotransferSystem: right_lift expects a cotransfer system");
  ArrowSet r = upward_extension(k).complement();
  assert(r == right_lifters_oracle(k));
  return r;
}

WfsDiagnosis validate_wfs(const ArrowSet& left, const ArrowSet& right) {
  const Lattice& l = left.lattice();
  if (&l != &right.lattice())
    throw Error(ErrorKind::mixed_lattices,
                "MixedLattices: WFS halves belong to different lattices");

  // factorization: x->y = (z->y in R u id) o (x->z in L u id)
  for (int i = 0; i < l.arrow_count(); ++i) {
    const Arrow f = l.arrow_at(i);
    bool factored = false;
    for (int z = 0; z < l.size() && !factored; ++z) {
      if (!l.leq(f.src, z) || !l.leq(z, f.tgt)) continue;
      const bool left_ok = z == f.src || left.contains(Arrow{f.src, z});
      const bool right_ok = z == f.tgt || right.contains(Arrow{z, f.tgt});
      factored = left_ok && right_ok;
    }
    if (!factored)
      return {WfsDiagnosis::Failure::factorization, f};
  }

  const ArrowSet expect_left = left_lifters_oracle(right);
  if (!(left == expect_left)) {
    const ArrowSet diff =
        (left - expect_left) | (expect_left - left);
    return {WfsDiagnosis::Failure::left_mismatch, diff.arrows().front()};
  }
  const ArrowSet expect_right = right_lifters_oracle(left);
  if (!(right == expect_right)) {
    const ArrowSet diff =
        (right - expect_right) | (expect_right - right);
    return {WfsDiagnosis::Failure::right_mismatch, diff.arrows().front()};
  }
  return {};
}

Wfs wfs_from_transfer(const ArrowSet& t) {
  Wfs w{left_lift(t), t};
  assert(validate_wfs(w.left, w.right).ok());
  return w;
}

Wfs wfs_from_cotransfer(const ArrowSet& k) {
  Wfs w{k, right_lift(k)};
  assert(validate_wfs(w.left, w.right).ok());
  return w;
}

}  // namespace latmodel
