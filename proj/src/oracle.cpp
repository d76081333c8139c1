#include "stralg/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "stralg/rewrite.hpp"

namespace stralg {

namespace {

void check_shape(const Presentation& pres, const Representation& r, const char* who) {
  const Quiver& q = pres.quiver;
  if (r.dims.size() != q.vertices.size() || r.matrices.size() != q.arrows.size())
    throw Error(std::string(who) + ": representation shape mismatch");
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int rows = r.dims[q.arrows[a].dst];
    int cols = r.dims[q.arrows[a].src];
    if ((int)r.matrices[a].size() != rows)
      throw Error(std::string(who) + ": matrix row mismatch on arrow " +
                  q.arrows[a].name);
    for (const auto& row : r.matrices[a])
      if ((int)row.size() != cols)
        throw Error(std::string(who) + ": matrix column mismatch on arrow " +
                    q.arrows[a].name);
  }
}

}  // namespace

std::vector<std::vector<Mat>> hom_basis(const Presentation& pres,
                                        const Representation& M,
                                        const Representation& N) {
  check_shape(pres, M, "hom_dim (M)");
  check_shape(pres, N, "hom_dim (N)");
  const Quiver& q = pres.quiver;
  int nv = (int)q.vertices.size();

  // unknowns: entries of f_v (N.dims[v] x M.dims[v]), flattened per vertex
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
  int unknowns = offset[nv];

  Mat sys;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].dst;
    // f_t * M_a - N_a * f_s = 0, entry (i, j): i < N.dims[t], j < M.dims[s]
    for (int i = 0; i < N.dims[t]; ++i)
      for (int j = 0; j < M.dims[s]; ++j) {
        Vec row(unknowns, Rat(0));
        for (int k = 0; k < M.dims[t]; ++k)
          row[offset[t] + i * M.dims[t] + k] += M.matrices[a][k][j];
        for (int k = 0; k < N.dims[s]; ++k)
          row[offset[s] + k * M.dims[s] + j] -= N.matrices[a][i][k];
        sys.push_back(std::move(row));
      }
  }
  auto null_vecs = sys.empty() ? std::vector<Vec>()
                               : nullspace_basis(sys, unknowns);
  if (sys.empty()) {
    null_vecs.clear();
    for (int u = 0; u < unknowns; ++u) {
      Vec v(unknowns, Rat(0));
      v[u] = Rat(1);
      null_vecs.push_back(std::move(v));
    }
  }
  std::vector<std::vector<Mat>> basis;
  for (const Vec& x : null_vecs) {
    std::vector<Mat> tuple(nv);
    for (int v = 0; v < nv; ++v) {
      tuple[v] = make_matrix(N.dims[v], M.dims[v]);
      for (int i = 0; i < N.dims[v]; ++i)
        for (int j = 0; j < M.dims[v]; ++j)
          tuple[v][i][j] = x[offset[v] + i * M.dims[v] + j];
    }
    basis.push_back(std::move(tuple));
  }
  return basis;
}

int hom_dim(const Presentation& pres, const Representation& M,
            const Representation& N) {
  return (int)hom_basis(pres, M, N).size();
}

namespace {

bool tuple_invertible(const std::vector<Mat>& f) {
  for (const Mat& m : f)
    if (!mat_invertible(m)) return false;
  return true;
}

std::vector<Mat> combine(const std::vector<std::vector<Mat>>& basis,
                         const std::vector<Rat>& coeffs, int nv) {
  std::vector<Mat> out(nv);
  for (int v = 0; v < nv; ++v) {
    int rows = (int)basis[0][v].size();
    int cols = rows ? (int)basis[0][v][0].size() : 0;
    out[v] = make_matrix(rows, cols);
    for (size_t b = 0; b < basis.size(); ++b)
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          out[v][i][j] += coeffs[b] * basis[b][v][i][j];
  }
  return out;
}

}  // namespace

bool rep_iso(const Presentation& pres, const Representation& M,
             const Representation& N) {
  if (M.dims != N.dims) return false;
  auto basis = hom_basis(pres, M, N);
  if (basis.empty()) {
    // zero modules are isomorphic; anything else needs a map
    for (int d : M.dims)
      if (d) return false;
    return true;
  }
  int nv = (int)pres.quiver.vertices.size();
  int k = (int)basis.size();

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Rat> coeffs(k);
    for (auto& c : coeffs) c = Rat(dist(rng));
    if (tuple_invertible(combine(basis, coeffs, nv))) return true;
  }

  // deterministic fallback: necessary conditions, then full grid with
  // per-variable range exceeding the determinant's per-variable degree
  if (!(hom_dim(pres, M, N) == hom_dim(pres, N, M) &&
        hom_dim(pres, M, N) == hom_dim(pres, M, M)))
    return false;
  int maxdim = 0;
  for (int d : M.dims) maxdim = std::max(maxdim, d);
  long long range = maxdim + 1;
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= (2 * range + 1);
    if (total > 300000) throw Error("rep_iso: specialization grid too large");
  }
  std::vector<long long> idx(k, 0);
  for (long long step = 0; step < total; ++step) {
    std::vector<Rat> coeffs(k);
    long long rest = step;
    for (int i = 0; i < k; ++i) {
      coeffs[i] = Rat((long long)(rest % (2 * range + 1)) - range);
      rest /= (2 * range + 1);
    }
    if (tuple_invertible(combine(basis, coeffs, nv))) return true;
  }
  return false;  // determinant vanishes identically on a full grid
}

int algebra_dim(const Presentation& pres, int degree_bound) {
  // default: 2*|arrows| + max generator length
  if (degree_bound <= 0)
    degree_bound = 2 * (int)pres.quiver.arrows.size() +
                   pres.max_generator_length();
  degree_bound = std::max(degree_bound, 2);
  PathRewriter rw(pres.quiver, degree_bound);
  for (const auto& r : pres.relations) rw.add(r);
  auto mons = rw.normal_monomials(degree_bound, 2000000);
  if (!mons)
    throw Error("algebra_dim: truncation not closed at degree bound " +
                std::to_string(degree_bound) + "; raise --degree-bound");
  return (int)mons->size();
}

namespace {

// basis = p concatenated with its nonzero continuations, in discovery order
std::vector<Path> continuation_basis(const Presentation& pres, const Path& p) {
  const Quiver& q = pres.quiver;
  std::vector<Path> basis{p};
  std::vector<Path> frontier{p};
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const Path& x : frontier)
      for (int a : q.arrows_from(x.target(q))) {
        Path ext = x;
        ext.arrows.push_back(a);
        if (!pres.path_is_zero(ext)) {
          basis.push_back(ext);
          next.push_back(std::move(ext));
        }
      }
    frontier = std::move(next);
  }
  return basis;
}

Representation rep_from_basis(const Presentation& pres, const std::vector<Path>& basis) {
  const Quiver& q = pres.quiver;
  Representation rep;
  rep.dims.assign(q.vertices.size(), 0);
  std::vector<int> coord(basis.size());
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) {
    coord[i] = rep.dims[basis[i].target(q)]++;
    index[{basis[i].base, basis[i].arrows}] = (int)i;
  }
  rep.matrices.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a)
    rep.matrices[a] =
        make_matrix(rep.dims[q.arrows[a].dst], rep.dims[q.arrows[a].src]);
  for (size_t i = 0; i < basis.size(); ++i) {
    int at = basis[i].target(q);
    for (int a : q.arrows_from(at)) {
      Path ext = basis[i];
      ext.arrows.push_back(a);
      auto it = index.find({ext.base, ext.arrows});
      if (it != index.end())
        rep.matrices[a][coord[it->second]][coord[i]] = Rat(1);
    }
  }
  return rep;
}

}  // namespace

Representation projective_rep(const Presentation& pres, int v) {
  return rep_from_basis(pres, continuation_basis(pres, trivial_path(v)));
}

Representation ideal_rep(const Presentation& pres, const Path& p) {
  if (pres.path_is_zero(p)) throw Error("ideal_rep of a zero path");
  return rep_from_basis(pres, continuation_basis(pres, p));
}

VerificationReport verify_cma(const CmaPresentation& cma, int degree_bound) {
  const Presentation& src = cma.source;
  VerificationReport rep;

  for (const auto& d : cma.diagnostics) rep.failures.push_back(d);

  // route 1: dimension of the emitted presentation
  try {
    rep.d1 = algebra_dim(cma.presentation, degree_bound);
  } catch (const Error& e) {
    rep.failures.push_back(std::string("algebra_dim failed: ") + e.what());
  }

  // route 2: endomorphism algebra of the G-projective sum
  int n = (int)cma.objects.size();
  std::vector<Representation> reps;
  reps.reserve(n);
  for (const auto& o : cma.objects)
    reps.push_back(o.gproj ? ideal_rep(src, o.path)
                           : projective_rep(src, o.original_vertex));

  // arrow multiplicities in the CMA quiver
  std::map<std::pair<int, int>, int> arrow_count;
  for (const auto& a : cma.presentation.quiver.arrows)
    arrow_count[{a.src, a.dst}]++;

  rep.d2 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // arrow i -> j denotes an irreducible morphism G_j -> G_i
      int hd = hom_dim(src, reps[j], reps[i]);
      rep.d2 += hd;
      PairEntry e;
      e.src = i;
      e.dst = j;
      e.arrows = arrow_count.count({i, j}) ? arrow_count[{i, j}] : 0;
      e.homdim = hd;
      rep.per_pair.push_back(e);
      if (e.arrows > hd)
        rep.failures.push_back(
            "arrow multiplicity exceeds hom dimension between " +
            cma.presentation.quiver.vertices[i] + " and " +
            cma.presentation.quiver.vertices[j]);
    }

  // semantic soundness of the emitted generators
  for (const auto& r : cma.presentation.relations) {
    auto v0 = evaluate_cma_path(cma, r.terms[0].path);
    if (r.monomial()) {
      if (v0) rep.failures.push_back("zero relation with nonzero value");
    } else {
      auto v1 = evaluate_cma_path(cma, r.terms[1].path);
      if (!v0 || !v1 || !(*v0 == *v1))
        rep.failures.push_back("commutativity relation with unequal values");
    }
  }

  if (rep.d1 != rep.d2)
    rep.failures.push_back("dimension mismatch: presentation gives " +
                           std::to_string(rep.d1) +
                           ", endomorphism route gives " +
                           std::to_string(rep.d2));
  rep.pass = rep.failures.empty();
  return rep;
}

VerificationReport verify_cma(const Presentation& pres, int degree_bound) {
  return verify_cma(build_cma(pres), degree_bound);
}

}  // namespace stralg
