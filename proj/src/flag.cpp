#include "flagslice/flag.hpp"

#include <algorithm>

namespace flagslice {

FlagMatrix::FlagMatrix(Matrix columns, std::vector<int> dims)
    : columns_(std::move(columns)), dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidArgument("flag needs at least one subspace");
  int prev = 0;
  for (int d : dims_) {
    if (d <= prev) throw InvalidArgument("flag dimensions must increase strictly");
    prev = d;
  }
  if (dims_.back() != columns_.cols())
    throw InvalidArgument("last flag dimension must equal the column count");
  if (rank(columns_) != columns_.cols()) throw InvalidArgument("flag columns are dependent");
}

FlagMatrix FlagMatrix::complete(Matrix columns) {
  std::vector<int> dims(columns.cols());
  for (int i = 0; i < columns.cols(); ++i) dims[i] = i + 1;
  return FlagMatrix(std::move(columns), std::move(dims));
}

FlagMatrix FlagMatrix::coordinate(const Permutation& w) {
  Matrix m(w.size(), w.size());
  for (int c = 0; c < w.size(); ++c) m(w(c + 1) - 1, c) = 1;
  return complete(std::move(m));
}

FlagMatrix FlagMatrix::coarsen(const DimensionSequence& d) const {
  if (d.n() != columns_.cols()) throw InvalidArgument("coarsening type does not match flag size");
  auto target = d.prefix_sums();
  for (int t : target)
    if (std::find(dims_.begin(), dims_.end(), t) == dims_.end())
      throw InvalidArgument("coarsening type is not coarser than the flag");
  return FlagMatrix(columns_, target);
}

namespace {

nlohmann::json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class read_integer(const nlohmann::json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

}  // namespace

nlohmann::json FlagMatrix::to_json() const {
  nlohmann::json cols = nlohmann::json::array();
  for (int c = 0; c < columns_.cols(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (int r = 0; r < columns_.rows(); ++r) {
      const auto& x = columns_(r, c);
      col.push_back({integer(x.re().get_num()), integer(x.re().get_den()),
                     integer(x.im().get_num()), integer(x.im().get_den())});
    }
    cols.push_back(std::move(col));
  }
  return {{"n", n()}, {"dims", dims_}, {"columns", std::move(cols)}};
}

FlagMatrix FlagMatrix::from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const auto& cols = j.at("columns");
  Matrix m(n, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != n) throw InvalidArgument("column length mismatch");
    for (int r = 0; r < n; ++r) {
      const auto& e = cols[c][r];
      mpq_class re(read_integer(e.at(0)), read_integer(e.at(1)));
      mpq_class im(read_integer(e.at(2)), read_integer(e.at(3)));
      re.canonicalize();
      im.canonicalize();
      m(r, c) = GaussianRational(re, im);
    }
  }
  return FlagMatrix(std::move(m), j.at("dims").get<std::vector<int>>());
}

bool same_flag(const FlagMatrix& a, const FlagMatrix& b) {
  if (a.n() != b.n() || a.dims() != b.dims()) return false;
  for (std::size_t i = 0; i < a.dims().size(); ++i)
    if (!(column_echelon(a.subspace(static_cast<int>(i))) ==
          column_echelon(b.subspace(static_cast<int>(i)))))
      return false;
  return true;
}

}  // namespace flagslice
