#include "brokencycle/sdot.hpp"

#include <sstream>

#include "brokencycle/error.hpp"

namespace bc {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

TwoPeriodicComplex::TwoPeriodicComplex(Matrix d0, Matrix d1) : d0_(std::move(d0)), d1_(std::move(d1)) {
  if (d0_.rows() != d1_.cols() || d0_.cols() != d1_.rows()) {
    raise(ErrorCode::kDimensionMismatch, "differentials of shape " + shape(d0_) + " and " +
                                             shape(d1_) + " do not form a cycle");
  }
  if (!(d0_.field() == d1_.field())) raise(ErrorCode::kDimensionMismatch, "differentials over different fields");
  if (!(d1_ * d0_).is_zero() || !(d0_ * d1_).is_zero()) {
    raise(ErrorCode::kNotAComplex, "d^2 != 0");
  }
}

TwoPeriodicComplex TwoPeriodicComplex::zero(Field field) { return trivial(field, 0, 0); }

TwoPeriodicComplex TwoPeriodicComplex::trivial(Field field, std::size_t dim0, std::size_t dim1) {
  return TwoPeriodicComplex(Matrix(field, dim1, dim0), Matrix(field, dim0, dim1));
}

std::string TwoPeriodicComplex::to_string() const {
  std::ostringstream os;
  os << "complex(" << dim(0) << "," << dim(1) << ")";
  return os.str();
}

ComplexMap::ComplexMap(TwoPeriodicComplex src, TwoPeriodicComplex tgt, Matrix f0, Matrix f1)
    : src_(std::move(src)), tgt_(std::move(tgt)), f0_(std::move(f0)), f1_(std::move(f1)) {
  for (int i = 0; i < 2; ++i) {
    const Matrix& fi = f(i);
    if (fi.rows() != tgt_.dim(i) || fi.cols() != src_.dim(i)) {
      raise(ErrorCode::kDimensionMismatch, "f" + std::to_string(i) + " has shape " + shape(fi));
    }
  }
  for (int i = 0; i < 2; ++i) {
    if (!(f(i + 1) * src_.d(i) == tgt_.d(i) * f(i))) {
      raise(ErrorCode::kInvalidArgument,
            "not a chain map: f" + std::to_string((i + 1) % 2) + " d" + std::to_string(i) +
                " != d" + std::to_string(i) + "' f" + std::to_string(i));
    }
  }
}

ComplexMap ComplexMap::identity(const TwoPeriodicComplex& x) {
  return ComplexMap(x, x, Matrix::identity(x.field(), x.dim(0)), Matrix::identity(x.field(), x.dim(1)));
}

ComplexMap ComplexMap::zero(const TwoPeriodicComplex& src, const TwoPeriodicComplex& tgt) {
  return ComplexMap(src, tgt, Matrix(src.field(), tgt.dim(0), src.dim(0)),
                    Matrix(src.field(), tgt.dim(1), src.dim(1)));
}

ComplexMap compose(const ComplexMap& g, const ComplexMap& f) {
  if (!(f.tgt() == g.src())) raise(ErrorCode::kInvalidArgument, "maps are not composable");
  return ComplexMap(f.src(), g.tgt(), g.f(0) * f.f(0), g.f(1) * f.f(1));
}

TwoPeriodicComplex cone(const ComplexMap& f) {
  const TwoPeriodicComplex& x = f.src();
  const TwoPeriodicComplex& y = f.tgt();
  std::vector<Matrix> d;
  for (int i = 0; i < 2; ++i) {
    // Cone_i = X_{i+1} + Y_i  ->  Cone_{i+1} = X_i + Y_{i+1}.
    Matrix m(x.field(), x.dim(i) + y.dim(i + 1), x.dim(i + 1) + y.dim(i));
    m.set_block(0, 0, -x.d(i + 1));
    m.set_block(x.dim(i), 0, f.f(i + 1));
    m.set_block(x.dim(i), x.dim(i + 1), y.d(i));
    d.push_back(std::move(m));
  }
  return TwoPeriodicComplex(d[0], d[1]);
}

TwoPeriodicComplex shift(const TwoPeriodicComplex& x) { return TwoPeriodicComplex(-x.d(1), -x.d(0)); }

ComplexMap shift(const ComplexMap& f) { return ComplexMap(shift(f.src()), shift(f.tgt()), f.f(1), f.f(0)); }

HomologyDims homology_dims(const TwoPeriodicComplex& x) {
  std::size_t r0 = rank(x.d(0));
  std::size_t r1 = rank(x.d(1));
  return {x.dim(0) - r0 - r1, x.dim(1) - r0 - r1};
}

bool is_quasi_iso(const ComplexMap& f) { return homology_dims(cone(f)) == HomologyDims{}; }

// ---------------------------------------------------------------------------
// Filtrations

FilteredObject::FilteredObject(std::vector<TwoPeriodicComplex> objects, std::vector<ComplexMap> maps)
    : field_(objects.empty() ? Field() : objects.front().field()),
      objects_(std::move(objects)),
      maps_(std::move(maps)) {
  if (objects_.empty() ? !maps_.empty() : maps_.size() + 1 != objects_.size()) {
    raise(ErrorCode::kInvalidArgument, "a filtration of length n needs n - 1 maps");
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (!(maps_[i].src() == objects_[i]) || !(maps_[i].tgt() == objects_[i + 1])) {
      raise(ErrorCode::kInvalidArgument, "map " + std::to_string(i + 1) + " does not join X_" +
                                             std::to_string(i + 1) + " to X_" + std::to_string(i + 2));
    }
  }
}

ComplexMap FilteredObject::composite(std::size_t i, std::size_t j) const {
  if (i < 1 || j > length() || i > j) {
    raise(ErrorCode::kIndexOutOfRange, "no composite X_" + std::to_string(i) + " -> X_" + std::to_string(j));
  }
  ComplexMap out = ComplexMap::identity(object(i));
  for (std::size_t k = i; k < j; ++k) out = compose(link(k), out);
  return out;
}

namespace {

// cone(X_1 -> X_j) -> cone(X_1 -> X_{j+1}): identity on X_1, x_j on X_j.
ComplexMap cone_link(const FilteredObject& f, std::size_t j) {
  TwoPeriodicComplex src = cone(f.composite(1, j));
  TwoPeriodicComplex tgt = cone(f.composite(1, j + 1));
  const TwoPeriodicComplex& x1 = f.object(1);
  std::vector<Matrix> g;
  for (int i = 0; i < 2; ++i) {
    g.push_back(direct_sum(Matrix::identity(f.field(), x1.dim(i + 1)), f.link(j).f(i)));
  }
  return ComplexMap(src, tgt, g[0], g[1]);
}

}  // namespace

FilteredObject face(const FilteredObject& f, std::size_t i) {
  const std::size_t n = f.length();
  if (n == 0 || i > n) {
    raise(ErrorCode::kIndexOutOfRange, "face " + std::to_string(i) + " of a length-" + std::to_string(n) +
                                           " filtration");
  }
  std::vector<TwoPeriodicComplex> objects;
  std::vector<ComplexMap> maps;
  if (i == 0) {
    for (std::size_t j = 2; j <= n; ++j) objects.push_back(cone(f.composite(1, j)));
    for (std::size_t j = 2; j < n; ++j) maps.push_back(cone_link(f, j));
    if (objects.empty()) return FilteredObject(f.field());
    return FilteredObject(std::move(objects), std::move(maps));
  }
  if (n == 1) return FilteredObject(f.field());
  for (std::size_t k = 1; k <= n; ++k) {
    if (k != i) objects.push_back(f.object(k));
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (k == i || k + 1 == i) continue;
    maps.push_back(f.link(k));
  }
  if (i > 1 && i < n) {
    auto at = maps.begin() + static_cast<std::ptrdiff_t>(i - 2);
    maps.insert(at, compose(f.link(i), f.link(i - 1)));
  }
  return FilteredObject(std::move(objects), std::move(maps));
}

FilteredObject degeneracy(const FilteredObject& f, std::size_t i) {
  const std::size_t n = f.length();
  if (i > n) {
    raise(ErrorCode::kIndexOutOfRange, "degeneracy " + std::to_string(i) + " of a length-" +
                                           std::to_string(n) + " filtration");
  }
  std::vector<TwoPeriodicComplex> objects = f.objects();
  std::vector<ComplexMap> maps = f.maps();
  if (i == 0) {
    TwoPeriodicComplex z = TwoPeriodicComplex::zero(f.field());
    if (n > 0) maps.insert(maps.begin(), ComplexMap::zero(z, objects.front()));
    objects.insert(objects.begin(), z);
  } else {
    objects.insert(objects.begin() + static_cast<std::ptrdiff_t>(i), f.object(i));
    maps.insert(maps.begin() + static_cast<std::ptrdiff_t>(i - 1), ComplexMap::identity(f.object(i)));
  }
  return FilteredObject(std::move(objects), std::move(maps));
}

FilteredObject rotate(const FilteredObject& f, RotationModel model) {
  const std::size_t n = f.length();
  if (n == 0) raise(ErrorCode::kIndexOutOfRange, "cannot rotate the empty filtration");
  const TwoPeriodicComplex& x1 = f.object(1);
  TwoPeriodicComplex last =
      model == RotationModel::kCorrect ? shift(x1) : TwoPeriodicComplex(x1.d(1), x1.d(0));
  std::vector<TwoPeriodicComplex> objects;
  std::vector<ComplexMap> maps;
  for (std::size_t j = 2; j <= n; ++j) objects.push_back(cone(f.composite(1, j)));
  for (std::size_t j = 2; j < n; ++j) maps.push_back(cone_link(f, j));
  if (n >= 2) {
    // cone(X_1 -> X_n) -> X_1[1], projecting away X_n.
    const TwoPeriodicComplex& top = objects.back();
    std::vector<Matrix> p;
    for (int i = 0; i < 2; ++i) {
      Matrix m(f.field(), x1.dim(i + 1), top.dim(i));
      m.set_block(0, 0, Matrix::identity(f.field(), x1.dim(i + 1)));
      p.push_back(std::move(m));
    }
    maps.push_back(ComplexMap(top, last, p[0], p[1]));
  }
  objects.push_back(last);
  return FilteredObject(std::move(objects), std::move(maps));
}

Fingerprint fingerprint(const FilteredObject& f) {
  Fingerprint fp;
  for (const auto& x : f.objects()) fp.objects.push_back(homology_dims(x));
  for (std::size_t i = 1; i <= f.length(); ++i) {
    for (std::size_t j = i + 1; j <= f.length(); ++j) {
      fp.cones.emplace(std::pair{i, j}, homology_dims(cone(f.composite(i, j))));
    }
  }
  return fp;
}

PeriodicityReport rotation_periodicity_check(const FilteredObject& f, RotationModel model) {
  PeriodicityReport rep;
  rep.n = f.length();
  if (rep.n == 0) {
    rep.pass = rep.fingerprint_match = true;
    rep.detail = "empty filtration";
    return rep;
  }
  try {
    FilteredObject r = f;
    for (std::size_t k = 0; k <= rep.n; ++k) r = rotate(r, model);
    rep.fingerprint_match = fingerprint(r) == fingerprint(f);
    if (!rep.fingerprint_match) rep.detail = "fingerprints differ";
    if (rep.n == 1) {
      // rotate^2 (X_1) = (X_1[2]) and [2] is the identity on the nose.
      ComplexMap eq(r.object(1), f.object(1), Matrix::identity(f.field(), f.object(1).dim(0)),
                    Matrix::identity(f.field(), f.object(1).dim(1)));
      rep.explicit_equivalence = is_quasi_iso(eq);
      if (!rep.explicit_equivalence) rep.detail = "comparison map is not a quasi-isomorphism";
    }
  } catch (const Error& e) {
    rep.fingerprint_match = false;
    rep.detail = std::string(error_name(e.code())) + ": " + e.what();
  }
  rep.pass = rep.fingerprint_match && (rep.n != 1 || rep.explicit_equivalence);
  return rep;
}

// ---------------------------------------------------------------------------
// Random data

TwoPeriodicComplex random_complex(Field field, std::size_t max_dim, std::mt19937_64& rng) {
  // Pieces: F in degree 0, F in degree 1, F -> F along d0, F -> F along d1.
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<int> kinds;
  std::uniform_int_distribution<int> pick(0, 3);
  for (std::size_t tries = 0; tries < 2 * max_dim + 2; ++tries) {
    int k = pick(rng);
    std::size_t na = a + (k != 1 ? 1 : 0);
    std::size_t nb = b + (k != 0 ? 1 : 0);
    if (na > max_dim || nb > max_dim) continue;
    if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) break;
    kinds.push_back(k);
    a = na;
    b = nb;
  }
  Matrix d0(field, b, a);
  Matrix d1(field, a, b);
  std::size_t i = 0;
  std::size_t j = 0;
  for (int k : kinds) {
    if (k == 2) d0(j, i) = 1;
    if (k == 3) d1(i, j) = 1;
    i += k != 1 ? 1 : 0;
    j += k != 0 ? 1 : 0;
  }
  Matrix p0 = random_invertible(field, a, rng);
  Matrix p1 = random_invertible(field, b, rng);
  return TwoPeriodicComplex(p1 * d0 * inverse(p0), p0 * d1 * inverse(p1));
}

ComplexMap random_map(const TwoPeriodicComplex& src, const TwoPeriodicComplex& tgt,
                      std::mt19937_64& rng) {
  const Field& fd = src.field();
  const std::size_t x0 = src.dim(0), x1 = src.dim(1), y0 = tgt.dim(0), y1 = tgt.dim(1);
  const std::size_t off1 = y0 * x0;
  const std::size_t unknowns = off1 + y1 * x1;
  // Rows: f1 d0 - d0' f0 (y1 x x0), then f0 d1 - d1' f1 (y0 x x1).
  Matrix eq(fd, y1 * x0 + y0 * x1, unknowns);
  for (std::size_t r = 0; r < y1; ++r) {
    for (std::size_t c = 0; c < x0; ++c) {
      std::size_t row = r * x0 + c;
      for (std::size_t k = 0; k < x1; ++k) eq(row, off1 + r * x1 + k) = fd.add(eq(row, off1 + r * x1 + k), src.d(0)(k, c));
      for (std::size_t k = 0; k < y0; ++k) eq(row, k * x0 + c) = fd.sub(eq(row, k * x0 + c), tgt.d(0)(r, k));
    }
  }
  const std::size_t base = y1 * x0;
  for (std::size_t r = 0; r < y0; ++r) {
    for (std::size_t c = 0; c < x1; ++c) {
      std::size_t row = base + r * x1 + c;
      for (std::size_t k = 0; k < x0; ++k) eq(row, r * x0 + k) = fd.add(eq(row, r * x0 + k), src.d(1)(k, c));
      for (std::size_t k = 0; k < y1; ++k) eq(row, off1 + k * x1 + c) = fd.sub(eq(row, off1 + k * x1 + c), tgt.d(1)(r, k));
    }
  }
  Matrix ker = kernel(eq);
  Matrix v = ker * random_matrix(fd, ker.cols(), 1, rng);
  Matrix f0(fd, y0, x0);
  Matrix f1(fd, y1, x1);
  for (std::size_t r = 0; r < y0; ++r) {
    for (std::size_t c = 0; c < x0; ++c) f0(r, c) = v(r * x0 + c, 0);
  }
  for (std::size_t r = 0; r < y1; ++r) {
    for (std::size_t c = 0; c < x1; ++c) f1(r, c) = v(off1 + r * x1 + c, 0);
  }
  return ComplexMap(src, tgt, f0, f1);
}

FilteredObject random_filtration(Field field, std::size_t length, std::size_t max_dim,
                                 std::mt19937_64& rng) {
  if (length == 0) return FilteredObject(field);
  std::vector<TwoPeriodicComplex> objects{random_complex(field, max_dim, rng)};
  std::vector<ComplexMap> maps;
  for (std::size_t i = 1; i < length; ++i) {
    objects.push_back(random_complex(field, max_dim, rng));
    maps.push_back(random_map(objects[i - 1], objects[i], rng));
  }
  return FilteredObject(std::move(objects), std::move(maps));
}

}  // namespace bc
