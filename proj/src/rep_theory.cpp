#include "parfus/rep_theory.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace parfus {
namespace {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Tolerances, fixed once: numerics here only ever bridge between exact
// combinatorics, so residuals sit many orders below these.
constexpr double kValueTol = 1e-9;    // residuals, orthogonality, trace matching
constexpr double kClusterGap = 1e-6;  // eigenvalue separation / clustering
constexpr double kRoundTol = 1e-6;    // float -> integer rounding guard

// Deterministic row order: degree ascending, then per-class values rounded to
// 1e-6, largest vector first. Puts the trivial character in row 0.
void sort_rows(CharacterTable& t) {
  int r = t.rows();
  std::vector<std::vector<std::pair<long, long>>> keys(r);
  for (int a = 0; a < r; ++a) {
    for (const Cplx& v : t.values[a]) {
      keys[a].emplace_back(llround(v.real() * 1e6), llround(v.imag() * 1e6));
    }
  }
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return keys[a] > keys[b];
  });
  std::vector<int> degrees(r);
  std::vector<std::vector<Cplx>> values(r);
  for (int a = 0; a < r; ++a) {
    degrees[a] = t.degrees[idx[a]];
    values[a] = std::move(t.values[idx[a]]);
  }
  t.degrees = std::move(degrees);
  t.values = std::move(values);
}

// First and second orthogonality, plus sum of squared degrees.
bool table_consistent(const CharacterTable& t) {
  int n = t.grp->order(), r = t.rows();
  long sq = 0;
  for (int d : t.degrees) sq += static_cast<long>(d) * d;
  if (sq != n) return false;
  for (int a = 0; a < r; ++a) {
    for (int b = a; b < r; ++b) {
      Cplx inner = 0;
      for (int c = 0; c < r; ++c) {
        inner += static_cast<double>(t.classes[c].size()) * t.values[a][c] *
                 std::conj(t.values[b][c]);
      }
      inner /= static_cast<double>(n);
      if (std::abs(inner - (a == b ? 1.0 : 0.0)) > kValueTol) return false;
    }
  }
  return true;
}

CharacterTable abelian_table(const FiniteGroup& g) {
  auto dec = elementary_decomposition(g);
  int n = g.order();
  int k = static_cast<int>(dec.factors.size());
  CharacterTable t;
  t.grp = &g;
  t.classes.resize(n);
  t.class_of.resize(n);
  for (int i = 0; i < n; ++i) {
    t.classes[i] = {i};
    t.class_of[i] = i;
  }
  // Dual group: one character per exponent tuple against the cyclic factors.
  std::vector<long> q(k);
  for (int i = 0; i < k; ++i) q[i] = dec.factors[i].order();
  std::vector<long> tup(k, 0);
  for (int row = 0; row < n; ++row) {
    std::vector<Cplx> vals(n);
    for (int x = 0; x < n; ++x) {
      double frac = 0;
      for (int i = 0; i < k; ++i) {
        frac += static_cast<double>(tup[i] * dec.coords[x][i]) / static_cast<double>(q[i]);
      }
      vals[x] = std::polar(1.0, 2.0 * std::numbers::pi * frac);
    }
    t.values.push_back(std::move(vals));
    t.degrees.push_back(1);
    for (int i = k; i-- > 0;) {
      if (++tup[i] < q[i]) break;
      tup[i] = 0;
    }
  }
  sort_rows(t);
  return t;
}

struct ClassData {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
};

ClassData conjugacy_classes(const FiniteGroup& g) {
  int n = g.order();
  ClassData cd;
  cd.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (cd.class_of[x] >= 0) continue;
    std::vector<int> members;
    for (int a = 0; a < n; ++a) {
      int y = g.mul(a, g.mul(x, g.inverse(a)));
      if (cd.class_of[y] < 0) {
        cd.class_of[y] = static_cast<int>(cd.classes.size());
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    cd.classes.push_back(std::move(members));
  }
  return cd;
}

// Class-sum method: the central-character vectors are the common eigenvectors
// of the structure-constant matrices M_i(j,k) = #{(a,b) in C_i x C_j : ab = z_k}.
CharacterTable classsum_table(const FiniteGroup& g) {
  int n = g.order();
  ClassData cd = conjugacy_classes(g);
  int r = static_cast<int>(cd.classes.size());

  std::vector<Eigen::MatrixXd> m(r, Eigen::MatrixXd::Zero(r, r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      std::vector<long> cnt(r, 0);
      for (int a : cd.classes[i]) {
        for (int b : cd.classes[j]) cnt[cd.class_of[g.mul(a, b)]]++;
      }
      for (int k = 0; k < r; ++k) {
        m[i](j, k) = static_cast<double>(cnt[k]) / static_cast<double>(cd.classes[k].size());
      }
    }
  }

  std::mt19937 rng(0x5eedu);
  std::uniform_real_distribution<double> unif(0.25, 1.0);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) mix += unif(rng) * m[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(mix);
    if (es.info() != Eigen::Success) continue;

    std::vector<Cplx> ev(r);
    for (int i = 0; i < r; ++i) ev[i] = es.eigenvalues()(i);
    std::sort(ev.begin(), ev.end(), [](const Cplx& a, const Cplx& b) {
      return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
    });
    bool separated = true;
    for (int i = 0; i + 1 < r; ++i) {
      if (std::abs(ev[i + 1] - ev[i]) < kClusterGap) separated = false;
    }
    if (!separated) continue;

    CharacterTable t;
    t.grp = &g;
    t.classes = cd.classes;
    t.class_of = cd.class_of;
    bool ok = true;
    for (int col = 0; col < r && ok; ++col) {
      CVec v = es.eigenvectors().col(col);
      int mstar = 0;
      for (int i = 1; i < r; ++i) {
        if (std::abs(v(i)) > std::abs(v(mstar))) mstar = i;
      }
      std::vector<Cplx> omega(r);
      double s = 0;
      for (int i = 0; i < r && ok; ++i) {
        CVec w = m[i] * v;
        omega[i] = w(mstar) / v(mstar);
        if ((w - omega[i] * v).cwiseAbs().maxCoeff() > kValueTol) ok = false;
        s += std::norm(omega[i]) / static_cast<double>(cd.classes[i].size());
      }
      if (!ok) break;
      double dd = std::sqrt(static_cast<double>(n) / s);
      long d = llround(dd);
      if (d < 1 || std::abs(dd - static_cast<double>(d)) > kRoundTol) {
        ok = false;
        break;
      }
      std::vector<Cplx> row(r);
      for (int i = 0; i < r; ++i) {
        row[i] = static_cast<double>(d) * omega[i] / static_cast<double>(cd.classes[i].size());
      }
      t.values.push_back(std::move(row));
      t.degrees.push_back(static_cast<int>(d));
    }
    if (!ok) continue;
    sort_rows(t);
    if (!table_consistent(t)) continue;
    return t;
  }
  throw std::logic_error("character_table: class-sum method did not converge");
}

}  // namespace

CharacterTable character_table(const FiniteGroup& grp) {
  CharacterTable t = grp.is_abelian() ? abelian_table(grp) : classsum_table(grp);
  if (!table_consistent(t)) {
    throw std::logic_error("character_table: orthogonality validation failed");
  }
  return t;
}

std::vector<int> character_degrees(const FiniteGroup& grp) {
  return character_table(grp).degrees;
}

std::vector<int> tensor_multiplicities(const CharacterTable& t, int row_a, int row_b) {
  int n = t.grp->order(), r = t.rows();
  std::vector<int> mult(r);
  for (int c = 0; c < r; ++c) {
    Cplx acc = 0;
    for (int i = 0; i < r; ++i) {
      acc += static_cast<double>(t.classes[i].size()) * t.values[row_a][i] *
             t.values[row_b][i] * std::conj(t.values[c][i]);
    }
    acc /= static_cast<double>(n);
    long v = llround(acc.real());
    if (std::abs(acc - static_cast<double>(v)) > kRoundTol || v < 0) {
      throw std::logic_error("tensor_multiplicities: non-integral multiplicity");
    }
    mult[c] = static_cast<int>(v);
  }
  long check = 0;
  for (int c = 0; c < r; ++c) check += static_cast<long>(mult[c]) * t.degrees[c];
  if (check != static_cast<long>(t.degrees[row_a]) * t.degrees[row_b]) {
    throw std::logic_error("tensor_multiplicities: dimension count is off");
  }
  return mult;
}

const SubgroupAsGroup& AlgebraContext::isotropy_group(uint64_t mask) {
  auto it = subs_.find(mask);
  if (it == subs_.end()) {
    Subgroup s{grp, mask};
    it = subs_.emplace(mask, subgroup_as_group(s)).first;
  }
  return it->second;
}

const CharacterTable& AlgebraContext::isotropy_table(uint64_t mask) {
  auto it = tables_.find(mask);
  if (it == tables_.end()) {
    it = tables_.emplace(mask, character_table(isotropy_group(mask).group)).first;
  }
  return it->second;
}

AlgebraContext make_context(const FiniteGroup& grp, int cap) {
  AlgebraContext ctx;
  ctx.grp = &grp;
  ctx.cap = cap;
  ctx.orbits = fundamental_domain(grp, cap);
  ctx.block_list = blocks(grp, cap);
  return ctx;
}

std::vector<SimpleLabel> simple_labels(AlgebraContext& ctx) {
  std::vector<SimpleLabel> out;
  for (int bi = 0; bi < static_cast<int>(ctx.block_list.size()); ++bi) {
    const BlockInfo& b = ctx.block_list[bi];
    const CharacterTable& t = ctx.isotropy_table(b.isotropy_mask);
    for (int a = 0; a < t.rows(); ++a) {
      out.push_back(SimpleLabel{b.rep, bi, a, static_cast<long>(b.n) * t.degrees[a]});
    }
  }
  return out;
}

GroupAlgebraMatrix module_matrix(const FiniteGroup& grp, const BlockInfo& b, int g) {
  GroupAlgebraMatrix m(grp, b.isotropy_mask, b.n);
  int ginv = grp.inverse(g);
  for (int j = 0; j < b.n; ++j) {
    ESubset xj = translate(grp, b.transversal[j], b.rep);
    if (!subset_contains(xj, ginv)) continue;
    int i = b.member_index.at(translate(grp, g, xj));
    int t = grp.mul(grp.inverse(b.transversal[i]), grp.mul(g, b.transversal[j]));
    m.add(i, j, t, 1);
  }
  return m;
}

namespace {

// Explicit unitary matrices for one character-table row, pulled out of the
// regular representation: cut the isotypic component with the central
// idempotent, then split off a single copy as a generic eigenspace of an
// averaged (hence equivariant) random Hermitian map.
std::vector<CMat> irrep_matrices(const FiniteGroup& h, const CharacterTable& t, int row) {
  int n = h.order();
  int d = t.degrees[row];
  std::vector<CMat> reg(n, CMat::Zero(n, n));
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < n; ++x) reg[g](h.mul(g, x), x) = 1.0;
  }
  if (d == 1) {
    std::vector<CMat> out(n, CMat::Zero(1, 1));
    for (int g = 0; g < n; ++g) out[g](0, 0) = t.value_at(row, g);
    return out;
  }

  CMat p = CMat::Zero(n, n);
  for (int g = 0; g < n; ++g) p += t.value_at(row, h.inverse(g)) * reg[g];
  p *= static_cast<double>(d) / static_cast<double>(n);

  // Orthogonal projection, so singular values are 0/1 and the rank is d^2.
  Eigen::JacobiSVD<CMat> svd(p, Eigen::ComputeThinU);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 0.5) rank++;
  }
  if (rank != d * d) {
    throw std::logic_error("irrep_matrices: isotypic component has wrong dimension");
  }
  CMat q = svd.matrixU().leftCols(rank);
  std::vector<CMat> rho(n);
  for (int g = 0; g < n; ++g) rho[g] = q.adjoint() * reg[g] * q;

  std::mt19937 rng(0xd1cEu);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int attempt = 0; attempt < 32; ++attempt) {
    CMat b = CMat::Zero(rank, rank);
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) b(i, j) = Cplx(unif(rng), unif(rng));
    }
    CMat avg = CMat::Zero(rank, rank);
    CMat herm = (b + b.adjoint()) / 2.0;
    for (int g = 0; g < n; ++g) avg += rho[g] * herm * rho[g].adjoint();
    avg /= static_cast<double>(n);

    Eigen::SelfAdjointEigenSolver<CMat> es(avg);
    if (es.info() != Eigen::Success) continue;
    // eigenvalues ascending; a generic equivariant map has eigenspaces that
    // are single copies, i.e. clusters of size exactly d
    int start = -1;
    for (int i = 0; i < rank;) {
      int j = i + 1;
      while (j < rank && es.eigenvalues()(j) - es.eigenvalues()(j - 1) < kClusterGap) j++;
      if (j - i == d) {
        start = i;
        break;
      }
      i = j;
    }
    if (start < 0) continue;
    CMat u = q * es.eigenvectors().middleCols(start, d);

    std::vector<CMat> out(n);
    for (int g = 0; g < n; ++g) out[g] = u.adjoint() * reg[g] * u;
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) {
      if (std::abs(out[g].trace() - t.value_at(row, g)) > kValueTol) ok = false;
      for (int g2 = 0; g2 < n && ok; ++g2) {
        if ((out[g] * out[g2] - out[h.mul(g, g2)]).norm() > kValueTol) ok = false;
      }
    }
    if (ok) return out;
  }
  throw std::logic_error("irrep_matrices: no generic splitting found");
}

CMat specialize(const GroupAlgebraMatrix& m, const SubgroupAsGroup& sg,
                const std::vector<CMat>& alpha, int d) {
  CMat a = CMat::Zero(m.n * d, m.n * d);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      for (const auto& [t, c] : m.entry[i][j]) {
        a.block(i * d, j * d, d, d) += c.get_d() * alpha[sg.from_parent[t]];
      }
    }
  }
  return a;
}

std::string label_str(const FiniteGroup& grp, const SimpleLabel& l) {
  std::ostringstream os;
  os << grp.label << " X=" << l.rep << " alpha=" << l.alpha;
  return os.str();
}

}  // namespace

CheckReport verify_simples(const FiniteGroup& grp, int cap) {
  CheckReport rep;
  AlgebraContext ctx = make_context(grp, cap);
  auto labels = simple_labels(ctx);
  int n = grp.order();

  auto run = [&rep](const std::string& name, auto&& body) {
    CheckResult r;
    r.name = name;
    body(r);
    rep.checks.push_back(std::move(r));
  };

  run("squared_dims_sum_to_algebra_dim", [&](CheckResult& r) {
    long got = 0;
    for (const auto& l : labels) got += l.dim * l.dim;
    long want = dimension_info(grp, cap).arrow_count;
    r.cases = static_cast<long>(labels.size());
    if (got != want) {
      r.pass = false;
      r.counterexample = "sum " + std::to_string(got) + " vs dim " + std::to_string(want);
    }
  });

  // Everything per-label below reuses these.
  struct ModuleData {
    const SimpleLabel* label;
    int d = 1;
    std::vector<CMat> alpha;  // irrep matrices, local element order
    std::vector<CMat> act;    // one matrix per group element
  };
  std::vector<ModuleData> mods;
  for (const auto& l : labels) {
    const BlockInfo& b = ctx.block_list[l.block];
    const SubgroupAsGroup& sg = ctx.isotropy_group(b.isotropy_mask);
    const CharacterTable& t = ctx.isotropy_table(b.isotropy_mask);
    ModuleData md{&l, t.degrees[l.alpha], irrep_matrices(sg.group, t, l.alpha), {}};
    md.act.reserve(n);
    for (int g = 0; g < n; ++g) {
      md.act.push_back(specialize(module_matrix(grp, b, g), sg, md.alpha, md.d));
    }
    mods.push_back(std::move(md));
  }

  run("identity_acts_as_identity", [&](CheckResult& r) {
    for (const auto& md : mods) {
      ++r.cases;
      CMat id = CMat::Identity(md.act[0].rows(), md.act[0].cols());
      if ((md.act[0] - id).norm() > kValueTol) {
        r.pass = false;
        r.counterexample = label_str(grp, *md.label);
        return;
      }
    }
  });

  run("partial_representation_laws", [&](CheckResult& r) {
    for (const auto& md : mods) {
      for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
          const CMat& ag = md.act[g];
          const CMat& ah = md.act[h];
          const CMat& ahi = md.act[grp.inverse(h)];
          const CMat& agi = md.act[grp.inverse(g)];
          const CMat& agh = md.act[grp.mul(g, h)];
          ++r.cases;
          if ((ag * ah * ahi - agh * ahi).norm() > kValueTol ||
              (agi * ag * ah - agi * agh).norm() > kValueTol) {
            r.pass = false;
            r.counterexample =
                label_str(grp, *md.label) + " g=" + std::to_string(g) + " h=" + std::to_string(h);
            return;
          }
        }
      }
    }
  });

  run("generator_adjoint_is_inverse", [&](CheckResult& r) {
    for (const auto& md : mods) {
      for (int g = 0; g < n; ++g) {
        ++r.cases;
        if ((md.act[g].adjoint() - md.act[grp.inverse(g)]).norm() > kValueTol) {
          r.pass = false;
          r.counterexample = label_str(grp, *md.label) + " g=" + std::to_string(g);
          return;
        }
      }
    }
  });

  run("subset_idempotents_act_boolean", [&](CheckResult& r) {
    for (const auto& md : mods) {
      const SimpleLabel& l = *md.label;
      const BlockInfo& b = ctx.block_list[l.block];
      const SubgroupAsGroup& sg = ctx.isotropy_group(b.isotropy_mask);
      int d = md.d;
      AlgebraElement gam = gamma_idem(grp, b.rep);
      for (int g = 0; g < n; ++g) {
        AlgebraElement x = eps_gen(grp, g, cap) * gam;
        CMat e = specialize(phi_block(grp, b, x), sg, md.alpha, d);
        CMat want = CMat::Zero(b.n * d, b.n * d);
        for (int j = 0; j < b.n; ++j) {
          if (subset_contains(translate(grp, b.transversal[j], b.rep), g)) {
            want.block(j * d, j * d, d, d) = CMat::Identity(d, d);
          }
        }
        ++r.cases;
        if ((e - want).norm() > kValueTol) {
          r.pass = false;
          r.counterexample = label_str(grp, l) + " g=" + std::to_string(g);
          return;
        }
      }
    }
  });

  run("modules_irreducible", [&](CheckResult& r) {
    for (const auto& md : mods) {
      int m = static_cast<int>(md.act[0].rows());
      CMat k = CMat::Zero(static_cast<long>(n) * m * m, m * m);
      // row block per g: vec(A_g C - C A_g) as a linear map in vec(C)
      for (int g = 0; g < n; ++g) {
        for (int p = 0; p < m; ++p) {
          for (int q2 = 0; q2 < m; ++q2) {
            long rowi = (static_cast<long>(g) * m + p) * m + q2;
            for (int s = 0; s < m; ++s) {
              k(rowi, s * m + q2) += md.act[g](p, s);
              k(rowi, p * m + s) -= md.act[g](s, q2);
            }
          }
        }
      }
      Eigen::BDCSVD<CMat> svd(k);
      int nullity = m * m;
      for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > kValueTol) nullity--;
      }
      ++r.cases;
      if (nullity != 1) {
        r.pass = false;
        r.counterexample =
            label_str(grp, *md.label) + " commutant dim " + std::to_string(nullity);
        return;
      }
    }
  });

  return rep;
}

}  // namespace parfus
