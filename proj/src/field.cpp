#include "switchscan/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace switchscan {

namespace {

struct Modulus {
  int p;
  int k;
  std::vector<int> low;  // x^k = -(low[0] + low[1] x + ...)
};

std::optional<Modulus> builtin_modulus(int q) {
  static const std::map<int, Modulus> table = {
      {4, {2, 2, {1, 1}}},          {8, {2, 3, {1, 1, 0}}},       {9, {3, 2, {1, 0}}},
      {16, {2, 4, {1, 1, 0, 0}}},   {25, {5, 2, {2, 1}}},         {27, {3, 3, {1, 2, 0}}},
      {32, {2, 5, {1, 0, 1, 0, 0}}}, {49, {7, 2, {1, 0}}},        {64, {2, 6, {1, 1, 0, 0, 0, 0}}},
  };
  if (auto it = table.find(q); it != table.end()) return it->second;
  if (q >= 2 && q <= 64) {
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) return std::nullopt;
    return Modulus{q, 1, {0}};
  }
  return std::nullopt;
}

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (auto& x : c) {
    x = a % p;
    a /= p;
  }
  return c;
}

int undigits(const std::vector<int>& c, int p) {
  int a = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

const SmallField& SmallField::get(int q) {
  static std::mutex lock;
  static std::map<int, std::unique_ptr<SmallField>> cache;
  std::lock_guard guard(lock);
  auto& slot = cache[q];
  if (!slot) {
    const auto m = builtin_modulus(q);
    if (!m) throw DomainError("no built-in field of order " + std::to_string(q));
    slot.reset(new SmallField(m->p, m->k, m->low));
  }
  return *slot;
}

SmallField::SmallField(int p, int k, std::vector<int> modulus) : q_(1), p_(p), k_(k) {
  for (int i = 0; i < k; ++i) q_ *= p;
  const auto n = static_cast<std::size_t>(q_);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  square_.assign(n, false);
  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a, p, k);
    std::vector<int> na(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) na[i] = (p - da[i]) % p;
    neg_[static_cast<std::size_t>(a)] = undigits(na, p);
    for (int b = 0; b < q_; ++b) {
      const auto db = digits(b, p, k);
      std::vector<int> s(da.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = (da[i] + db[i]) % p;
      add_[idx(a, b)] = undigits(s, p);

      std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
      for (int d = 2 * k - 2; d >= k; --d) {
        const int c = prod[static_cast<std::size_t>(d)];
        prod[static_cast<std::size_t>(d)] = 0;
        for (int i = 0; i < k; ++i) {
          auto& t = prod[static_cast<std::size_t>(d - k + i)];
          t = ((t - c * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
        }
      }
      prod.resize(static_cast<std::size_t>(k));
      mul_[idx(a, b)] = undigits(prod, p);
    }
  }
  for (int a = 0; a < q_; ++a) square_[static_cast<std::size_t>(mul(a, a))] = true;
  for (int a = 1; a < q_ && primitive_ == 0; ++a) {
    int x = a, ord = 1;
    while (x != 1) {
      x = mul(x, a);
      ++ord;
    }
    if (ord == q_ - 1) primitive_ = a;
  }
  if (q_ == 2) primitive_ = 1;
}

int SmallField::inv(int a) const {
  if (a == 0) throw DomainError("inverse of zero");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("field element without inverse");
}

int SmallField::pow(int a, int e) const {
  int r = 1;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

namespace {

int encode(const std::vector<int>& v, int q) {
  int code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * q + *it;
  return code;
}

std::vector<int> apply_map(const std::vector<int>& v, const SemilinearMap& m, const SmallField& f) {
  const auto d = v.size();
  std::vector<int> src = v;
  for (int i = 0; i < m.frobenius_power; ++i)
    for (auto& x : src) x = f.frobenius(x);
  std::vector<int> out(d, 0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) out[j] = f.add(out[j], f.mul(src[i], m.matrix[i * d + j]));
  return out;
}

SemilinearMap identity_map(int d) {
  SemilinearMap m;
  m.matrix.assign(static_cast<std::size_t>(d * d), 0);
  for (int i = 0; i < d; ++i) m.matrix[static_cast<std::size_t>(i * d + i)] = 1;
  return m;
}

std::vector<int> additive_basis(const SmallField& f) {
  std::vector<int> basis;
  for (int j = 0, e = 1; j < f.degree(); ++j, e *= f.characteristic()) basis.push_back(e);
  return basis;
}

}  // namespace

std::vector<std::vector<int>> projective_points(int d, const SmallField& f) {
  const int q = f.order();
  std::vector<std::vector<int>> pts;
  for (int lead = d - 1; lead >= 0; --lead) {
    int count = 1;
    for (int i = 0; i < lead; ++i) count *= q;
    for (int c = 0; c < count; ++c) {
      std::vector<int> v(static_cast<std::size_t>(d), 0);
      int rest = c;
      for (int i = 0; i < lead; ++i) {
        v[static_cast<std::size_t>(i)] = rest % q;
        rest /= q;
      }
      v[static_cast<std::size_t>(lead)] = 1;
      pts.push_back(std::move(v));
    }
  }
  return pts;
}

std::vector<std::vector<int>> affine_points(int d, const SmallField& f) {
  const int q = f.order();
  int count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  std::vector<std::vector<int>> pts;
  for (int c = 0; c < count; ++c) {
    std::vector<int> v(static_cast<std::size_t>(d));
    int rest = c;
    for (auto& x : v) {
      x = rest % q;
      rest /= q;
    }
    pts.push_back(std::move(v));
  }
  return pts;
}

std::vector<SemilinearMap> sl_generators(int d, const SmallField& f) {
  std::vector<SemilinearMap> gens;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      for (int lambda : additive_basis(f)) {
        auto m = identity_map(d);
        m.matrix[static_cast<std::size_t>(i * d + j)] = lambda;
        gens.push_back(std::move(m));
      }
    }
  return gens;
}

SemilinearMap diagonal_map(int d, const SmallField&, int first_entry) {
  auto m = identity_map(d);
  m.matrix[0] = first_entry;
  return m;
}

SemilinearMap frobenius_map(int d) {
  auto m = identity_map(d);
  m.frobenius_power = 1;
  return m;
}

PermGroup projective_group(int d, const SmallField& f, const std::vector<SemilinearMap>& maps) {
  const int q = f.order();
  const auto pts = projective_points(d, f);
  if (pts.size() > static_cast<std::size_t>(kMaxDegree)) throw DomainError("projective space too large");
  int space = 1;
  for (int i = 0; i < d; ++i) space *= q;
  std::vector<int> index(static_cast<std::size_t>(space), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) index[static_cast<std::size_t>(encode(pts[i], q))] = static_cast<int>(i);

  std::vector<Permutation> gens;
  for (const auto& m : maps) {
    std::vector<int> images;
    for (const auto& v : pts) {
      auto w = apply_map(v, m, f);
      int lead = d - 1;
      while (w[static_cast<std::size_t>(lead)] == 0) --lead;
      const int s = f.inv(w[static_cast<std::size_t>(lead)]);
      for (auto& x : w) x = f.mul(x, s);
      images.push_back(index[static_cast<std::size_t>(encode(w, q))]);
    }
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(static_cast<int>(pts.size()), std::move(gens));
}

PermGroup affine_group(int d, const SmallField& f, const std::vector<SemilinearMap>& maps) {
  const int q = f.order();
  const auto pts = affine_points(d, f);
  if (pts.size() > static_cast<std::size_t>(kMaxDegree)) throw DomainError("affine space too large");
  std::vector<Permutation> gens;
  auto add_images = [&](auto&& image_of) {
    std::vector<int> images;
    for (const auto& v : pts) images.push_back(encode(image_of(v), q));
    gens.push_back(Permutation::from_images(images));
  };
  for (int i = 0; i < d; ++i)
    for (int lambda : additive_basis(f))
      add_images([&](std::vector<int> v) {
        v[static_cast<std::size_t>(i)] = f.add(v[static_cast<std::size_t>(i)], lambda);
        return v;
      });
  for (const auto& m : maps) add_images([&](const std::vector<int>& v) { return apply_map(v, m, f); });
  return PermGroup(static_cast<int>(pts.size()), std::move(gens));
}

}  // namespace switchscan
