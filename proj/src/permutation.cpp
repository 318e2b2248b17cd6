#include "quon/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quon {

namespace {

std::string bracketed(const std::vector<int>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ",";
    out << v[i];
  }
  out << "]";
  return out.str();
}

}  // namespace

Permutation::Permutation(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation degree");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation: " + bracketed(images_));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  const int n = degree();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((*this)(i) > (*this)(j)) ++count;
  return count;
}

std::uint64_t Permutation::lex_rank() const {
  const int n = degree();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t smaller_later = 0;
    for (int j = i + 1; j <= n; ++j)
      if ((*this)(j) < (*this)(i)) ++smaller_later;
    rank += smaller_later * factorial(n - i);
  }
  return rank;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i)
    inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::str() const { return bracketed(images_); }

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("composition degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i)
    images[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(images));
}

Permutation t1k(int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("t1k index out of range");
  std::vector<int> images(static_cast<std::size_t>(n));
  images[0] = k;
  for (int i = 2; i <= k; ++i) images[static_cast<std::size_t>(i - 1)] = i - 1;
  for (int i = k + 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = i;
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> result;
  result.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    result.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::vector<std::vector<int>> index_subsets(int n, int p) {
  if (p < 0 || p > n) throw std::invalid_argument("subset size out of range");
  std::vector<std::vector<int>> result;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(p));
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == p) {
      result.push_back(current);
      return;
    }
    const int remaining = p - static_cast<int>(current.size());
    for (int i = next; i <= n - remaining; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return result;
}

std::vector<Permutation> enumerate_snp(int n, int p) {
  if (p < 0 || p > n - 1) throw std::invalid_argument("snp index out of range");
  std::vector<Permutation> result;
  for (const auto& subset : index_subsets(n - 1, p)) {
    Permutation product(n);
    for (int idx : subset) product = compose(product, t1k(n, idx + 2));
    result.push_back(std::move(product));
  }
  return result;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i)
    b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

OrderedTuple::OrderedTuple(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0)
      throw std::invalid_argument("negative mode label in " + bracketed(entries_));
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i] == entries_[j])
        throw std::invalid_argument("repeated mode label in " + bracketed(entries_));
  }
}

bool OrderedTuple::contains(int mode) const {
  return std::find(entries_.begin(), entries_.end(), mode) != entries_.end();
}

OrderedTuple OrderedTuple::reversed() const {
  std::vector<int> v(entries_.rbegin(), entries_.rend());
  return OrderedTuple(std::move(v));
}

OrderedTuple OrderedTuple::without_position(int i) const {
  if (i < 1 || i > size()) throw std::invalid_argument("position out of range");
  std::vector<int> v = entries_;
  v.erase(v.begin() + (i - 1));
  return OrderedTuple(std::move(v));
}

OrderedTuple OrderedTuple::appended(int mode) const {
  std::vector<int> v = entries_;
  v.push_back(mode);
  return OrderedTuple(std::move(v));
}

OrderedTuple OrderedTuple::subsequence(const std::vector<int>& indices) const {
  std::vector<int> v;
  v.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || i >= size()) throw std::invalid_argument("index out of range");
    v.push_back(entries_[static_cast<std::size_t>(i)]);
  }
  return OrderedTuple(std::move(v));
}

std::string OrderedTuple::str() const { return bracketed(entries_); }

OrderedTuple apply(const Permutation& p, const OrderedTuple& tuple) {
  if (p.degree() != tuple.size())
    throw std::invalid_argument("permutation/tuple size mismatch");
  std::vector<int> v(static_cast<std::size_t>(tuple.size()));
  for (int i = 1; i <= tuple.size(); ++i)
    v[static_cast<std::size_t>(i - 1)] = tuple(p(i));
  return OrderedTuple(std::move(v));
}

OrderedTuple concat(const OrderedTuple& a, const OrderedTuple& b) {
  std::vector<int> v = a.entries();
  v.insert(v.end(), b.entries().begin(), b.entries().end());
  return OrderedTuple(std::move(v));
}

OrderedTuple subtract(const OrderedTuple& whole, const OrderedTuple& part) {
  std::vector<int> v;
  for (int e : whole.entries())
    if (!part.contains(e)) v.push_back(e);
  if (static_cast<int>(v.size()) + part.size() != whole.size())
    throw std::invalid_argument("not a subset of the tuple");
  return OrderedTuple(std::move(v));
}

int relative_inversions(const OrderedTuple& reference,
                        const OrderedTuple& rearranged) {
  if (reference.size() != rearranged.size())
    throw std::invalid_argument("tuples differ in length");
  const int n = reference.size();
  std::vector<int> positions(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int found = 0;
    for (int j = 1; j <= n; ++j)
      if (reference(j) == rearranged(i)) {
        found = j;
        break;
      }
    if (found == 0)
      throw std::invalid_argument("not a rearrangement of the reference");
    positions[static_cast<std::size_t>(i - 1)] = found;
  }
  return Permutation(std::move(positions)).inversions();
}

std::pair<OrderedTuple, int> split_concat(const OrderedTuple& K,
                                          const OrderedTuple& J) {
  const OrderedTuple rest = subtract(K, J);
  // J must inherit K's relative order.
  if (subtract(K, rest) != J)
    throw std::invalid_argument("subset does not preserve the tuple's order");
  const OrderedTuple arrangement = concat(rest, J);
  return {arrangement, relative_inversions(K, arrangement)};
}

}  // namespace quon
