#include "cancelab/fpmod.hpp"

#include <algorithm>
#include <sstream>

namespace cancelab {

namespace {

// columns of an r x c matrix, robust to r = 0 (keeps the column count)
std::vector<VecPoly> columns_of(const PolyMatrix& m, size_t ncols) {
  std::vector<VecPoly> out;
  out.reserve(ncols);
  for (size_t j = 0; j < ncols; ++j) out.push_back(mat_col(m, j));
  return out;
}

// prepared membership context for a submodule spanned by `cols` plus an
// ambient relation submodule `mod_rels`
struct SubmoduleContext {
  RingPtr ring;
  size_t rank = 0;
  size_t ncols = 0;
  ModuleGB gb;

  SubmoduleContext(const RingPtr& r, size_t rk, std::vector<VecPoly> cols,
                   const std::vector<VecPoly>& mod_rels)
      : ring(r), rank(rk), ncols(cols.size()) {
    std::vector<VecPoly> gens = std::move(cols);
    gens.insert(gens.end(), mod_rels.begin(), mod_rels.end());
    gb = module_groebner(ring, rank, gens);
  }

  std::optional<VecPoly> express(const VecPoly& v) const {
    auto h = gb.member(v);
    if (!h) return std::nullopt;
    return VecPoly(h->begin(), h->begin() + static_cast<long>(ncols));
  }
};

}  // namespace

// ---- PresentedModule ----

PresentedModule PresentedModule::cokernel(const RingPtr& ring, size_t rank,
                                          std::vector<VecPoly> relations) {
  PresentedModule m;
  m.ring_ = ring;
  m.rank_ = rank;
  for (auto& c : relations) {
    if (c.size() != rank) throw ArithError("relation rank mismatch");
    if (!vp_is_zero(c)) m.relations_.push_back(std::move(c));
  }
  return m;
}

PresentedModule PresentedModule::from_matrix(const RingPtr& ring, const PolyMatrix& m) {
  return cokernel(ring, m.size(), mat_cols(m));
}

PresentedModule PresentedModule::free_module(const RingPtr& ring, size_t rank) {
  return cokernel(ring, rank, {});
}

PresentedModule PresentedModule::cyclic_quotient(const Ideal& J) {
  std::vector<VecPoly> rels;
  for (const auto& g : J.gens) rels.push_back({g});
  auto m = cokernel(J.ring, 1, std::move(rels));
  m.modulus_ = J;
  return m;
}

void PresentedModule::set_modulus(Ideal J, bool augment) {
  if (!same_ring(J.ring, ring_)) throw ArithError("modulus ring mismatch");
  if (augment) {
    for (const auto& g : J.gens)
      for (size_t i = 0; i < rank_; ++i)
        relations_.push_back(vp_scale(vp_unit(ring_, rank_, i), g));
  }
  modulus_ = std::move(J);
  gb_cache_.reset();
}

const ModuleGB& PresentedModule::relation_gb() const {
  if (!gb_cache_)
    gb_cache_ = std::make_shared<ModuleGB>(module_groebner(ring_, rank_, relations_));
  return *gb_cache_;
}

bool PresentedModule::is_zero() const {
  if (rank_ == 0) return true;
  return relation_gb().is_full_module();
}

bool PresentedModule::element_is_zero(const VecPoly& v) const {
  if (vp_is_zero(v)) return true;
  if (relations_.empty()) return false;
  return relation_gb().contains(v);
}

std::string PresentedModule::str() const {
  std::ostringstream os;
  os << "coker(" << rank_ << " x " << relations_.size() << ")";
  if (modulus_) os << " over R/" << modulus_->str();
  return os.str();
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  if (!same_ring(a.ring(), b.ring())) throw ArithError("direct_sum: ring mismatch");
  std::vector<VecPoly> rels;
  for (const auto& c : a.relations()) {
    VecPoly v = c;
    v.insert(v.end(), b.rank(), Polynomial::zero(a.ring()));
    rels.push_back(std::move(v));
  }
  for (const auto& c : b.relations()) {
    VecPoly v = vp_zero(a.ring(), a.rank());
    v.insert(v.end(), c.begin(), c.end());
    rels.push_back(std::move(v));
  }
  auto m = PresentedModule::cokernel(a.ring(), a.rank() + b.rank(), std::move(rels));
  if (a.modulus() || b.modulus()) {
    if (!a.modulus() || !b.modulus())
      throw UnsupportedError("direct_sum: mixed modulus");
    m.set_modulus(*a.modulus(), /*augment=*/false);
  }
  return m;
}

// ---- ModuleMap ----

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, PolyMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() != target_.rank())
    throw ArithError("map matrix row count differs from target rank");
  for (const auto& row : matrix_)
    if (row.size() != source_.rank())
      throw ArithError("map matrix column count differs from source rank");

  // certify: each source relation maps into the target relation submodule
  const auto& srels = source_.relations();
  relation_lift_ = mat_zero(source_.ring(), target_.relations().size(), srels.size());
  if (!srels.empty()) {
    for (size_t j = 0; j < srels.size(); ++j) {
      VecPoly img = mat_apply(matrix_, srels[j]);
      if (vp_is_zero(img)) continue;
      if (target_.relations().empty())
        throw ArithError("map does not send relations to relations");
      auto h = target_.relation_gb().member(img);
      if (!h) throw ArithError("map does not send relations to relations");
      for (size_t i = 0; i < h->size(); ++i) relation_lift_[i][j] = (*h)[i];
    }
  }
}

ModuleMap ModuleMap::identity(const PresentedModule& m) {
  return ModuleMap(m, m, mat_identity(m.ring(), m.rank()));
}

ModuleMap ModuleMap::zero(const PresentedModule& source, const PresentedModule& target) {
  return ModuleMap(source, target, mat_zero(source.ring(), target.rank(), source.rank()));
}

bool ModuleMap::is_zero_map() const {
  for (size_t j = 0; j < source_.rank(); ++j)
    if (!target_.element_is_zero(mat_col(matrix_, j))) return false;
  return true;
}

ModuleMap compose(const ModuleMap& second, const ModuleMap& first) {
  if (second.source().rank() != first.target().rank())
    throw ArithError("compose: rank mismatch");
  if (first.target().rank() == 0)
    return ModuleMap::zero(first.source(), second.target());
  return ModuleMap(first.source(), second.target(),
                   mat_mul(second.matrix(), first.matrix()));
}

ModuleMap direct_sum_map(const ModuleMap& a, const ModuleMap& b) {
  PresentedModule src = direct_sum(a.source(), b.source());
  PresentedModule tgt = direct_sum(a.target(), b.target());
  PolyMatrix m = mat_zero(src.ring(), tgt.rank(), src.rank());
  for (size_t i = 0; i < a.target().rank(); ++i)
    for (size_t j = 0; j < a.source().rank(); ++j) m[i][j] = a.matrix()[i][j];
  for (size_t i = 0; i < b.target().rank(); ++i)
    for (size_t j = 0; j < b.source().rank(); ++j)
      m[a.target().rank() + i][a.source().rank() + j] = b.matrix()[i][j];
  return ModuleMap(std::move(src), std::move(tgt), std::move(m));
}

// ---- operations ----

std::vector<VecPoly> syzygies(const PolyMatrix& m, const RingPtr& ring) {
  return syzygy_columns(ring, m.size(), mat_cols(m));
}

PresentedModule present_cokernel(const RingPtr& ring, const PolyMatrix& m) {
  return PresentedModule::from_matrix(ring, m);
}

KernelResult kernel_of_map(const ModuleMap& f) {
  const RingPtr& ring = f.source().ring();
  size_t gM = f.source().rank(), gN = f.target().rank();

  // {u : A u in im Q}: first-block projections of syzygies of [A | Q]
  std::vector<VecPoly> combined = columns_of(f.matrix(), gM);
  size_t na = combined.size();
  for (const auto& q : f.target().relations()) combined.push_back(q);
  std::vector<VecPoly> syz = syzygy_columns(ring, gN, combined);

  std::vector<VecPoly> gens;  // columns in R^gM
  for (const auto& s : syz) {
    VecPoly u(s.begin(), s.begin() + static_cast<long>(na));
    if (!vp_is_zero(u)) gens.push_back(std::move(u));
  }

  // relations of the kernel: {c : U c in im P}
  std::vector<VecPoly> withp = gens;
  size_t nu = gens.size();
  for (const auto& p : f.source().relations()) withp.push_back(p);
  std::vector<VecPoly> ksyz = syzygy_columns(ring, gM, withp);
  std::vector<VecPoly> krels;
  for (const auto& s : ksyz) {
    VecPoly c(s.begin(), s.begin() + static_cast<long>(nu));
    if (!vp_is_zero(c)) krels.push_back(std::move(c));
  }

  PresentedModule K = PresentedModule::cokernel(ring, nu, std::move(krels));
  if (f.source().modulus()) K.set_modulus(*f.source().modulus(), /*augment=*/false);
  PolyMatrix inc = mat_from_cols(ring, gM, gens);
  ModuleMap inclusion(K, f.source(), std::move(inc));
  return KernelResult{std::move(K), std::move(inclusion)};
}

PresentedModule cokernel_of_map(const ModuleMap& f) {
  std::vector<VecPoly> rels = columns_of(f.matrix(), f.source().rank());
  for (const auto& q : f.target().relations()) rels.push_back(q);
  auto m = PresentedModule::cokernel(f.target().ring(), f.target().rank(), std::move(rels));
  if (f.target().modulus()) m.set_modulus(*f.target().modulus(), /*augment=*/false);
  return m;
}

std::optional<VecPoly> express_in(const RingPtr& ring, size_t rank,
                                  const std::vector<VecPoly>& cols,
                                  const std::vector<VecPoly>& mod_rels,
                                  const VecPoly& v) {
  SubmoduleContext ctx(ring, rank, cols, mod_rels);
  return ctx.express(v);
}

HomResult hom_module(const PresentedModule& m, const PresentedModule& n) {
  if (!same_ring(m.ring(), n.ring())) throw ArithError("hom: ring mismatch");
  const RingPtr& ring = m.ring();
  size_t gM = m.rank(), gN = n.rank();
  size_t aM = m.relations().size();
  size_t D = gN * gM, E = gN * aM;

  // N^gM with block-embedded relations
  std::vector<VecPoly> srels;
  for (size_t i = 0; i < gM; ++i) {
    for (const auto& q : n.relations()) {
      VecPoly v = vp_zero(ring, D);
      for (size_t r = 0; r < gN; ++r) v[i * gN + r] = q[r];
      srels.push_back(std::move(v));
    }
  }
  PresentedModule S = PresentedModule::cokernel(ring, D, srels);

  std::vector<VecPoly> trels;
  for (size_t j = 0; j < aM; ++j) {
    for (const auto& q : n.relations()) {
      VecPoly v = vp_zero(ring, E);
      for (size_t r = 0; r < gN; ++r) v[j * gN + r] = q[r];
      trels.push_back(std::move(v));
    }
  }
  PresentedModule T = PresentedModule::cokernel(ring, E, std::move(trels));

  // Lambda: H -> H * P, flattened column-major
  PolyMatrix lambda = mat_zero(ring, E, D);
  for (size_t i = 0; i < gM; ++i)
    for (size_t r = 0; r < gN; ++r)
      for (size_t j = 0; j < aM; ++j) {
        const Polynomial& pij = m.relations()[j][i];
        if (!pij.is_zero()) lambda[j * gN + r][i * gN + r] = pij;
      }

  ModuleMap phi(S, T, std::move(lambda));
  KernelResult ker = kernel_of_map(phi);

  HomResult out;
  out.source = m;
  out.target = n;
  out.module = ker.module;
  out.domain_relations = std::move(srels);
  for (size_t k = 0; k < ker.module.rank(); ++k) {
    VecPoly flat = mat_col(ker.inclusion.matrix(), k);
    PolyMatrix h = mat_zero(ring, gN, gM);
    for (size_t i = 0; i < gM; ++i)
      for (size_t r = 0; r < gN; ++r) h[r][i] = flat[i * gN + r];
    out.generators.push_back(std::move(h));
    out.flat_gens.push_back(std::move(flat));
  }
  return out;
}

ModuleMap HomResult::decode(const VecPoly& coords) const {
  const RingPtr& ring = source.ring();
  PolyMatrix h = mat_zero(ring, target.rank(), source.rank());
  for (size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    for (size_t r = 0; r < target.rank(); ++r)
      for (size_t i = 0; i < source.rank(); ++i)
        h[r][i] = h[r][i] + coords[k] * generators[k][r][i];
  }
  return ModuleMap(source, target, std::move(h));
}

std::optional<VecPoly> HomResult::encode(const ModuleMap& f) const {
  const RingPtr& ring = source.ring();
  size_t gM = source.rank(), gN = target.rank();
  VecPoly flat = vp_zero(ring, gN * gM);
  for (size_t i = 0; i < gM; ++i)
    for (size_t r = 0; r < gN; ++r) flat[i * gN + r] = f.matrix()[r][i];
  return express_in(ring, gN * gM, flat_gens, domain_relations, flat);
}

DualResult dual_module(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  size_t gM = m.rank(), aM = m.relations().size();

  std::vector<VecPoly> ptcols;  // columns of P^T, in R^aM
  for (size_t i = 0; i < gM; ++i) {
    VecPoly col;
    col.reserve(aM);
    for (size_t j = 0; j < aM; ++j) col.push_back(m.relations()[j][i]);
    ptcols.push_back(std::move(col));
  }
  std::vector<VecPoly> functionals = syzygy_columns(ring, aM, ptcols);
  std::vector<VecPoly> rels = syzygy_columns(ring, gM, functionals);

  DualResult out;
  out.module = PresentedModule::cokernel(ring, functionals.size(), std::move(rels));
  out.functionals = std::move(functionals);
  return out;
}

ModuleMap dual_map(const ModuleMap& f, const DualResult& target_dual,
                   const DualResult& source_dual) {
  const RingPtr& ring = f.source().ring();
  size_t gM = f.source().rank();
  PolyMatrix at = mat_transpose(f.matrix());
  SubmoduleContext ctx(ring, gM, source_dual.functionals, {});
  std::vector<VecPoly> cols;
  for (const auto& mu : target_dual.functionals) {
    VecPoly pulled = mat_apply(at, mu);  // A^T mu, a functional on M
    auto coords = ctx.express(pulled);
    if (!coords)
      throw ArithError("dual_map: pulled-back functional not in the dual module");
    cols.push_back(std::move(*coords));
  }
  PolyMatrix mtx = mat_from_cols(ring, source_dual.module.rank(), cols);
  return ModuleMap(target_dual.module, source_dual.module, std::move(mtx));
}

PresentedModule ext1(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  size_t aM = m.relations().size();
  if (aM == 0) return PresentedModule::cokernel(ring, 0, {});  // free module

  PolyMatrix p = mat_from_cols(ring, m.rank(), m.relations());
  std::vector<VecPoly> s2 = syzygies(p, ring);

  PresentedModule f0d = PresentedModule::free_module(ring, m.rank());
  PresentedModule f1d = PresentedModule::free_module(ring, aM);
  PresentedModule f2d = PresentedModule::free_module(ring, s2.size());
  ModuleMap pt(f0d, f1d, mat_transpose(p));
  ModuleMap st(f1d, f2d, mat_transpose(mat_from_cols(ring, aM, s2)));
  return homology(pt, st);
}

PresentedModule homology(const ModuleMap& f, const ModuleMap& g) {
  if (f.target().rank() != g.source().rank())
    throw ArithError("homology: maps not composable");
  if (!compose(g, f).is_zero_map())
    throw ArithError("homology: composite is not zero");
  const RingPtr& ring = f.source().ring();

  KernelResult ker = kernel_of_map(g);
  size_t nu = ker.module.rank();

  // express image generators of f through the kernel generators
  std::vector<VecPoly> kcols = columns_of(ker.inclusion.matrix(), nu);
  SubmoduleContext ctx(ring, g.source().rank(), kcols, g.source().relations());
  std::vector<VecPoly> rels = ker.module.relations();
  for (size_t j = 0; j < f.source().rank(); ++j) {
    VecPoly img = mat_col(f.matrix(), j);
    if (vp_is_zero(img)) continue;
    auto coords = ctx.express(img);
    if (!coords) throw ArithError("homology: image not inside the kernel");
    if (!vp_is_zero(*coords)) rels.push_back(std::move(*coords));
  }
  return PresentedModule::cokernel(ring, nu, std::move(rels));
}

IsoCertificate is_isomorphism(const ModuleMap& f) {
  IsoCertificate cert;
  const RingPtr& ring = f.source().ring();
  size_t gM = f.source().rank(), gN = f.target().rank();

  // surjectivity: cokernel vanishes; the same context then lifts generators
  std::vector<VecPoly> acols = columns_of(f.matrix(), gM);
  SubmoduleContext ctx(ring, gN, acols, f.target().relations());
  std::vector<VecPoly> bcols;
  for (size_t i = 0; i < gN; ++i) {
    auto h = ctx.express(vp_unit(ring, gN, i));
    if (!h) {
      cert.failure = "cokernel is nonzero (generator " + std::to_string(i) +
                     " of the target is not hit)";
      return cert;
    }
    bcols.push_back(std::move(*h));
  }

  if (!kernel_of_map(f).module.is_zero()) {
    cert.failure = "kernel is nonzero";
    return cert;
  }

  PolyMatrix b = mat_from_cols(ring, gM, bcols);
  ModuleMap binv(f.target(), f.source(), b);  // certifies well-definedness

  // both composites must be the identity modulo relations
  PolyMatrix ab = mat_mul(f.matrix(), b);
  PolyMatrix ba = mat_mul(b, f.matrix());
  for (size_t j = 0; j < gN; ++j) {
    VecPoly col = mat_col(ab, j);
    col[j] = col[j] - Polynomial::from_int(ring, 1);
    if (!f.target().element_is_zero(col)) {
      cert.failure = "f o f^{-1} is not the identity";
      return cert;
    }
  }
  for (size_t j = 0; j < gM; ++j) {
    VecPoly col = mat_col(ba, j);
    col[j] = col[j] - Polynomial::from_int(ring, 1);
    if (!f.source().element_is_zero(col)) {
      cert.failure = "f^{-1} o f is not the identity";
      return cert;
    }
  }
  cert.iso = true;
  cert.inverse = std::move(b);
  return cert;
}

int generic_rank(const PresentedModule& m) {
  if (m.modulus())
    throw UnsupportedError("generic_rank: module carries a quotient modulus");
  const RingPtr& ring = m.ring();
  size_t rows = m.rank(), cols = m.relations().size();
  if (cols == 0) return static_cast<int>(rows);
  PolyMatrix a = mat_from_cols(ring, rows, m.relations());

  // Bareiss fraction-free elimination over the polynomial ring
  size_t r = 0, c = 0;
  Polynomial prev = Polynomial::from_int(ring, 1);
  while (r < rows && c < cols) {
    size_t pr = rows, pc = cols;
    for (size_t j = c; j < cols && pr == rows; ++j)
      for (size_t i = r; i < rows; ++i)
        if (!a[i][j].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    std::swap(a[r], a[pr]);
    if (pc != c)
      for (auto& row : a) std::swap(row[c], row[pc]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Polynomial num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        auto q = exact_divide(num, prev);
        if (!q) throw ArithError("Bareiss division failed");
        a[i][j] = *q;
      }
      a[i][c] = Polynomial::zero(ring);
    }
    prev = a[r][c];
    ++r;
    ++c;
  }
  return static_cast<int>(rows - r);
}

Ideal fitting_ideal(const PresentedModule& m, int i) {
  if (i < 0) throw ArithError("fitting_ideal: index must be >= 0");
  const RingPtr& ring = m.ring();
  int s = static_cast<int>(m.rank()) - i;  // minor size
  if (s <= 0) return Ideal{ring, {Polynomial::from_int(ring, 1)}};
  size_t rows = m.rank(), cols = m.relations().size();
  if (static_cast<size_t>(s) > rows || static_cast<size_t>(s) > cols)
    return Ideal{ring, {}};
  PolyMatrix a = mat_from_cols(ring, rows, m.relations());

  std::vector<Polynomial> gens;
  // all k-subsets of {0..n-1} in lexicographic order
  auto combos = [](size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> idx(k);
    for (size_t j = 0; j < k; ++j) idx[j] = j;
    while (true) {
      out.push_back(idx);
      long pos = static_cast<long>(k) - 1;
      while (pos >= 0 &&
             idx[static_cast<size_t>(pos)] == n - k + static_cast<size_t>(pos))
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (size_t j = static_cast<size_t>(pos) + 1; j < k; ++j)
        idx[j] = idx[j - 1] + 1;
    }
    return out;
  };
  auto rset = combos(rows, static_cast<size_t>(s));
  auto cset = combos(cols, static_cast<size_t>(s));
  for (const auto& rc : rset) {
    for (const auto& cc : cset) {
      PolyMatrix sub(static_cast<size_t>(s),
                     std::vector<Polynomial>(static_cast<size_t>(s)));
      for (size_t x = 0; x < static_cast<size_t>(s); ++x)
        for (size_t y = 0; y < static_cast<size_t>(s); ++y)
          sub[x][y] = a[rc[x]][cc[y]];
      Polynomial d = mat_det(sub);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  }
  return Ideal{ring, std::move(gens)};
}

PresentedModule tensor_with_quotient(const PresentedModule& m, const Ideal& j) {
  GroebnerBasis gj = buchberger(j);
  std::vector<VecPoly> rels;
  for (const auto& c : m.relations()) {
    VecPoly red;
    red.reserve(c.size());
    for (const auto& p : c) red.push_back(gj.normal_form(p));
    if (!vp_is_zero(red)) rels.push_back(std::move(red));
  }
  auto out = PresentedModule::cokernel(m.ring(), m.rank(), std::move(rels));
  out.set_modulus(j);
  return out;
}

DoubleDualResult double_dual_check(const PresentedModule& m) {
  DoubleDualResult out;
  const RingPtr& ring = m.ring();
  DualResult d1 = dual_module(m);
  DualResult d2 = dual_module(d1.module);

  size_t k1 = d1.module.rank();
  SubmoduleContext ctx(ring, k1, d2.functionals, {});
  std::vector<VecPoly> cols;
  for (size_t i = 0; i < m.rank(); ++i) {
    VecPoly val = vp_zero(ring, k1);
    for (size_t j = 0; j < k1; ++j) val[j] = d1.functionals[j][i];
    auto coords = ctx.express(val);
    if (!coords) {
      out.failure = "evaluation functional not expressible in the double dual";
      return out;
    }
    cols.push_back(std::move(*coords));
  }
  ModuleMap ev(m, d2.module, mat_from_cols(ring, d2.module.rank(), cols));
  IsoCertificate cert = is_isomorphism(ev);
  out.reflexive = cert.iso;
  out.failure = cert.failure;
  out.evaluation = std::move(ev);
  return out;
}

bool fitting_free_of_rank(const PresentedModule& m, int r) {
  if (r < 0) return false;
  Ideal low = fitting_ideal(m, r - 1);
  Ideal high = fitting_ideal(m, r);
  if (m.modulus()) {
    GroebnerBasis gj = buchberger(*m.modulus());
    for (const auto& g : low.gens)
      if (!gj.normal_form(g).is_zero()) return false;
    Ideal sum = ideal_sum(high, *m.modulus());
    if (sum.is_zero()) return false;
    return buchberger(sum).is_unit_ideal();
  }
  if (!low.gens.empty()) return false;
  if (high.gens.empty()) return false;
  return buchberger(high).is_unit_ideal();
}

std::optional<CyclicStructure> cyclic_structure(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  if (m.rank() == 0) return std::nullopt;
  for (size_t i = 0; i < m.rank(); ++i) {
    std::vector<VecPoly> gens{vp_unit(ring, m.rank(), i)};
    gens.insert(gens.end(), m.relations().begin(), m.relations().end());
    ModuleGB gb = module_groebner(ring, m.rank(), gens);
    bool generates = true;
    for (size_t j = 0; j < m.rank() && generates; ++j)
      if (j != i && !gb.contains(vp_unit(ring, m.rank(), j))) generates = false;
    if (!generates) continue;
    // annihilator: {r : r e_i in relations}
    std::vector<VecPoly> cols{vp_unit(ring, m.rank(), i)};
    cols.insert(cols.end(), m.relations().begin(), m.relations().end());
    std::vector<VecPoly> syz = syzygy_columns(ring, m.rank(), cols);
    std::vector<Polynomial> ann;
    for (const auto& s : syz)
      if (!s[0].is_zero()) ann.push_back(s[0]);
    return CyclicStructure{i, Ideal{ring, std::move(ann)}};
  }
  return std::nullopt;
}

}  // namespace cancelab
