#include "latmodel/arrow_set.hpp"

#include <bit>
#include <cassert>

namespace latmodel {

namespace {

int word_count_for(const Lattice& l) { return (l.arrow_count() + 63) / 64; }

}  // namespace

ArrowSet::ArrowSet(const Lattice& lattice)
    : lattice_(&lattice), words_(word_count_for(lattice), 0) {}

ArrowSet ArrowSet::complete(const Lattice& lattice) {
  ArrowSet s(lattice);
  const int m = lattice.arrow_count();
  for (size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~uint64_t{0};
  if (m % 64 != 0 && !s.words_.empty())
    s.words_.back() = (uint64_t{1} << (m % 64)) - 1;
  if (m == 0) s.words_.assign(s.words_.size(), 0);
  return s;
}

ArrowSet ArrowSet::of(
    const Lattice& lattice,
    std::initializer_list<std::pair<ElementId, ElementId>> arrows) {
  ArrowSet s(lattice);
  for (auto [src, tgt] : arrows) s.insert(Arrow{src, tgt});
  return s;
}

bool ArrowSet::contains(Arrow f) const {
  const int idx = lattice_->arrow_index_or(f, -1);
  return idx >= 0 && contains_index(idx);
}

void ArrowSet::insert(Arrow f) { insert_index(lattice_->arrow_index(f)); }

int ArrowSet::count() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool ArrowSet::is_empty() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

std::vector<Arrow> ArrowSet::arrows() const {
  std::vector<Arrow> out;
  out.reserve(count());
  for (int i = 0; i < lattice_->arrow_count(); ++i)
    if (contains_index(i)) out.push_back(lattice_->arrow_at(i));
  return out;
}

void ArrowSet::check_same_lattice(const ArrowSet& o) const {
  if (lattice_ != o.lattice_)
    throw Error(ErrorKind::mixed_lattices,
                "MixedLattices: arrow sets belong to different lattices");
}

ArrowSet ArrowSet::operator|(const ArrowSet& o) const {
  check_same_lattice(o);
  ArrowSet r = *this;
  for (size_t w = 0; w < words_.size(); ++w) r.words_[w] |= o.words_[w];
  return r;
}

ArrowSet ArrowSet::operator&(const ArrowSet& o) const {
  check_same_lattice(o);
  ArrowSet r = *this;
  for (size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
  return r;
}

ArrowSet ArrowSet::operator-(const ArrowSet& o) const {
  check_same_lattice(o);
  ArrowSet r = *this;
  for (size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~o.words_[w];
  return r;
}

ArrowSet ArrowSet::complement() const {
  return ArrowSet::complete(*lattice_) - *this;
}

bool ArrowSet::operator==(const ArrowSet& o) const {
  return lattice_ == o.lattice_ && words_ == o.words_;
}

bool ArrowSet::subset_of(const ArrowSet& o) const {
  check_same_lattice(o);
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~o.words_[w]) return false;
  return true;
}

bool ArrowSet::intersects(const ArrowSet& o) const {
  check_same_lattice(o);
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & o.words_[w]) return true;
  return false;
}

bool ArrowSet::canonical_less(const ArrowSet& o) const {
  const int ca = count();
  const int cb = o.count();
  if (ca != cb) return ca < cb;
  // lexicographic on ascending index sequences: the first differing index
  // decides, and the set containing it is smaller.
  for (size_t w = 0; w < words_.size(); ++w) {
    const uint64_t diff = words_[w] ^ o.words_[w];
    if (diff) {
      const uint64_t low = diff & ~(diff - 1);
      return words_[w] & low;
    }
  }
  return false;
}

// -- predicates ---------------------------------------------------------------

bool composition_violation(const ArrowSet& a, ClosureViolation* out) {
  const Lattice& l = a.lattice();
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!l.lt(x, y) || !a.contains(Arrow{x, y})) continue;
      for (int z = 0; z < n; ++z)
        if (l.lt(y, z) && a.contains(Arrow{y, z}) &&
            !a.contains(Arrow{x, z})) {
          if (out) *out = {Arrow{x, y}, Arrow{x, z}};
          return true;
        }
    }
  return false;
}

bool is_composition_closed(const ArrowSet& a) {
  return !composition_violation(a, nullptr);
}

bool is_decomposable(const ArrowSet& a) {
  const Lattice& l = a.lattice();
  for (const Arrow& f : a.arrows())
    for (int y = 0; y < l.size(); ++y)
      if (l.lt(f.src, y) && l.lt(y, f.tgt) &&
          (!a.contains(Arrow{f.src, y}) || !a.contains(Arrow{y, f.tgt})))
        return false;
  return true;
}

bool is_wide_decomposable_subcategory(const ArrowSet& a) {
  return is_composition_closed(a) && is_decomposable(a);
}

bool transfer_violation(const ArrowSet& a, ClosureViolation* out) {
  const Lattice& l = a.lattice();
  for (const Arrow& f : a.arrows())
    for (int z = 0; z < l.size(); ++z) {
      if (!l.leq(z, f.tgt)) continue;
      const Arrow pb = l.pullback(f, z);
      if (!pb.is_identity() && !a.contains(pb)) {
        if (out) *out = {f, pb};
        return true;
      }
    }
  return false;
}

bool cotransfer_violation(const ArrowSet& a, ClosureViolation* out) {
  const Lattice& l = a.lattice();
  for (const Arrow& f : a.arrows())
    for (int z = 0; z < l.size(); ++z) {
      if (!l.leq(f.src, z)) continue;
      const Arrow po = l.pushout(f, z);
      if (!po.is_identity() && !a.contains(po)) {
        if (out) *out = {f, po};
        return true;
      }
    }
  return false;
}

bool is_transfer_system(const ArrowSet& a) {
  return !transfer_violation(a, nullptr) && is_composition_closed(a);
}

bool is_cotransfer_system(const ArrowSet& a) {
  return !cotransfer_violation(a, nullptr) && is_composition_closed(a);
}

bool is_saturated(const ArrowSet& a) {
  if (!is_transfer_system(a) && !is_cotransfer_system(a))
    throw Error(ErrorKind::not_transfer_or_cotransfer,
                "NotTransferOrCotransfer: saturation is only defined for "
                "transfer and cotransfer systems");
  return is_decomposable(a);
}

// -- closures -----------------------------------------------------------------

ArrowSet composition_closure(const ArrowSet& a) {
  const Lattice& l = a.lattice();
  const int n = l.size();
  ArrowSet r = a;
  // boolean Floyd-Warshall over the strict order
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (!l.lt(x, y) || !r.contains(Arrow{x, y})) continue;
      for (int z = 0; z < n; ++z)
        if (l.lt(y, z) && r.contains(Arrow{y, z})) r.insert(Arrow{x, z});
    }
  return r;
}

namespace {

// One pass adding every non-identity pullback of every member. The pullbacks
// of a pullback of f are pullbacks of f, so a single pass reaches the
// pullback closure.
ArrowSet pullback_pass(const ArrowSet& a) {
  const Lattice& l = a.lattice();
  ArrowSet r = a;
  for (const Arrow& f : a.arrows())
    for (int z = 0; z < l.size(); ++z) {
      if (!l.leq(z, f.tgt)) continue;
      const Arrow pb = l.pullback(f, z);
      if (!pb.is_identity()) r.insert(pb);
    }
  return r;
}

ArrowSet pushout_pass(const ArrowSet& a) {
  const Lattice& l = a.lattice();
  ArrowSet r = a;
  for (const Arrow& f : a.arrows())
    for (int z = 0; z < l.size(); ++z) {
      if (!l.leq(f.src, z)) continue;
      const Arrow po = l.pushout(f, z);
      if (!po.is_identity()) r.insert(po);
    }
  return r;
}

}  // namespace

ArrowSet generate_transfer(const ArrowSet& s) {
  ArrowSet r = s;
  for (;;) {
    const ArrowSet next = composition_closure(pullback_pass(r));
    if (next == r) break;
    r = next;
  }
  assert(is_transfer_system(r));
  return r;
}

ArrowSet generate_cotransfer(const ArrowSet& s) {
  ArrowSet r = s;
  for (;;) {
    const ArrowSet next = composition_closure(pushout_pass(r));
    if (next == r) break;
    r = next;
  }
  assert(is_cotransfer_system(r));
  return r;
}

// -- the lattice of (co)transfer systems ---------------------------------------

namespace {

void require_transfer(const ArrowSet& t, const char* who) {
  if (!is_transfer_system(t))
    throw Error(ErrorKind::not_transfer_system,
                std::string("NotTransferSystem: ") + who +
                    " expects transfer systems");
}

void require_cotransfer(const ArrowSet& k, const char* who) {
  if (!is_cotransfer_system(k))
    throw Error(ErrorKind::not_cotransfer_system,
                std::string("NotCotransferSystem: ") + who +
                    " expects cotransfer systems");
}

}  // namespace

ArrowSet ts_meet(const ArrowSet& t1, const ArrowSet& t2) {
  require_transfer(t1, "ts_meet");
  require_transfer(t2, "ts_meet");
  return t1 & t2;
}

ArrowSet ts_join(const ArrowSet& t1, const ArrowSet& t2) {
  require_transfer(t1, "ts_join");
  require_transfer(t2, "ts_join");
  ArrowSet r = composition_closure(t1 | t2);
  assert(r == generate_transfer(t1 | t2));
  return r;
}

ArrowSet cots_meet(const ArrowSet& k1, const ArrowSet& k2) {
  require_cotransfer(k1, "cots_meet");
  require_cotransfer(k2, "cots_meet");
  return k1 & k2;
}

ArrowSet cots_join(const ArrowSet& k1, const ArrowSet& k2) {
  require_cotransfer(k1, "cots_join");
  require_cotransfer(k2, "cots_join");
  ArrowSet r = composition_closure(k1 | k2);
  assert(r == generate_cotransfer(k1 | k2));
  return r;
}

// -- maxima inside a subcategory ------------------------------------------------

namespace {

void require_wide_decomposable(const ArrowSet& q, const char* who) {
  if (!is_composition_closed(q))
    throw Error(ErrorKind::not_decomposable,
                std::string("NotDecomposable: ") + who +
                    " expects a composition-closed input");
  if (!is_decomposable(q))
    throw Error(ErrorKind::not_decomposable,
                std::string("NotDecomposable: ") + who +
                    " expects a decomposable input");
}

}  // namespace

ArrowSet t_max(const ArrowSet& q) {
  require_wide_decomposable(q, "t_max");
  const Lattice& l = q.lattice();
  ArrowSet seed(l);
  for (auto [x, y] : l.covers()) {
    const Arrow f{x, y};
    if (!q.contains(f)) continue;
    bool good = true;
    for (int z = 0; z < l.size() && good; ++z) {
      if (!l.leq(z, y)) continue;
      const Arrow pb = l.pullback(f, z);
      if (!pb.is_identity() && !q.contains(pb)) good = false;
    }
    if (good) seed.insert(f);
  }
  ArrowSet r = composition_closure(seed);
  assert(is_transfer_system(r) && r.subset_of(q));
  return r;
}

ArrowSet k_max(const ArrowSet& q) {
  require_wide_decomposable(q, "k_max");
  const Lattice& l = q.lattice();
  ArrowSet seed(l);
  for (auto [x, y] : l.covers()) {
    const Arrow f{x, y};
    if (!q.contains(f)) continue;
    bool good = true;
    for (int z = 0; z < l.size() && good; ++z) {
      if (!l.leq(x, z)) continue;
      const Arrow po = l.pushout(f, z);
      if (!po.is_identity() && !q.contains(po)) good = false;
    }
    if (good) seed.insert(f);
  }
  ArrowSet r = composition_closure(seed);
  assert(is_cotransfer_system(r) && r.subset_of(q));
  return r;
}

}  // namespace latmodel
