#include "facet/sparse_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numeric>
#include <string>
#include <tuple>

#include "facet/error.hpp"

namespace facet {

double RowView::sum() const noexcept {
  double total = 0.0;
  for (float s : scores) total += s;
  return total;
}

SparseAssociationMatrix::SparseAssociationMatrix(MatrixHeader header, std::vector<std::uint64_t> offsets,
                                                 std::vector<std::uint32_t> columns, std::vector<float> scores)
    : header_(header), offsets_(std::move(offsets)), columns_(std::move(columns)), scores_(std::move(scores)) {
  if (offsets_.size() != static_cast<std::size_t>(header_.rows) + 1 || offsets_.front() != 0 ||
      offsets_.back() != columns_.size() || columns_.size() != scores_.size()) {
    throw Error(ErrorKind::Corrupt, "CSR arrays disagree with the header dimensions");
  }
  for (std::uint32_t r = 0; r < header_.rows; ++r) {
    const auto begin = offsets_[r];
    const auto end = offsets_[r + 1];
    if (end < begin) throw Error(ErrorKind::Corrupt, "row offsets decrease at row " + std::to_string(r));
    for (auto i = begin; i < end; ++i) {
      if (columns_[i] >= header_.cols) {
        throw Error(ErrorKind::Corrupt, "column id out of range in row " + std::to_string(r));
      }
      if (i > begin && columns_[i] <= columns_[i - 1]) {
        throw Error(ErrorKind::Corrupt, "column ids not strictly increasing in row " + std::to_string(r));
      }
      if (!(scores_[i] > 0.0f) || !std::isfinite(scores_[i])) {
        throw Error(ErrorKind::Corrupt, "non-positive score in row " + std::to_string(r));
      }
    }
  }
}

RowView SparseAssociationMatrix::row(std::uint32_t index) const {
  if (index >= header_.rows) {
    throw Error(ErrorKind::OutOfRange,
                "row " + std::to_string(index) + " out of range (" + std::to_string(header_.rows) + " rows)");
  }
  const auto begin = offsets_[index];
  const auto len = offsets_[index + 1] - begin;
  return RowView{std::span(columns_).subspan(begin, len), std::span(scores_).subspan(begin, len)};
}

float SparseAssociationMatrix::at(std::uint32_t r, std::uint32_t c) const {
  const RowView view = row(r);
  auto it = std::lower_bound(view.columns.begin(), view.columns.end(), c);
  if (it == view.columns.end() || *it != c) return 0.0f;
  return view.scores[static_cast<std::size_t>(it - view.columns.begin())];
}

bool operator==(const SparseAssociationMatrix& a, const SparseAssociationMatrix& b) {
  if (!(a.header_ == b.header_) || a.offsets_ != b.offsets_ || a.columns_ != b.columns_) return false;
  return a.scores_.size() == b.scores_.size() &&
         std::memcmp(a.scores_.data(), b.scores_.data(), a.scores_.size() * sizeof(float)) == 0;
}

CsrBuilder::CsrBuilder(MatrixHeader header) : header_(header) { offsets_.reserve(header.rows + 1); }

void CsrBuilder::push(std::uint32_t col, float score) {
  columns_.push_back(col);
  scores_.push_back(score);
}

void CsrBuilder::end_row() { offsets_.push_back(columns_.size()); }

SparseAssociationMatrix CsrBuilder::finish() && {
  while (offsets_.size() < static_cast<std::size_t>(header_.rows) + 1) end_row();
  return SparseAssociationMatrix(header_, std::move(offsets_), std::move(columns_), std::move(scores_));
}

std::uint64_t counts_fingerprint(const CooccurrenceCounts& counts, ContextFamily family) {
  // FNV-1a over a fixed little-endian serialization.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      h ^= (value >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(family));
  mix(counts.num_words());
  mix(counts.num_contexts());
  for (const auto& p : counts.pairs()) {
    mix(p.word.value);
    mix(p.context.value);
    mix(p.count);
  }
  return h;
}

MatrixPair build_matrices(const CooccurrenceCounts& counts, Measure measure, double shift_k, ContextFamily family) {
  if (shift_k < 0.0 || !std::isfinite(shift_k)) {
    throw Error(ErrorKind::InvalidArgument, "shift k must be finite and >= 0");
  }
  MatrixHeader header;
  header.family = family;
  header.measure = measure;
  header.shift_k = shift_k;
  header.fingerprint = counts_fingerprint(counts, family);

  const auto score = [&](const PairCount& p, Direction direction) {
    const CellCounts cell{p.count, counts.word_marginal(p.word), counts.context_marginal(p.context), counts.total()};
    return static_cast<float>(association(cell, AssociationConfig{measure, shift_k, direction}));
  };

  MatrixHeader vc_header = header;
  vc_header.orientation = Orientation::WordRows;
  vc_header.rows = counts.num_words();
  vc_header.cols = counts.num_contexts();
  CsrBuilder vc(vc_header);
  {
    std::uint32_t current = 0;
    for (const auto& p : counts.pairs()) {
      while (current < p.word.value) {
        vc.end_row();
        ++current;
      }
      const float s = score(p, Direction::WordToContext);
      if (s > 0.0f) vc.push(p.context.value, s);
    }
  }

  std::vector<PairCount> by_context(counts.pairs().begin(), counts.pairs().end());
  std::sort(by_context.begin(), by_context.end(), [](const PairCount& a, const PairCount& b) {
    return std::tie(a.context, a.word) < std::tie(b.context, b.word);
  });
  MatrixHeader cv_header = header;
  cv_header.orientation = Orientation::ContextRows;
  cv_header.rows = counts.num_contexts();
  cv_header.cols = counts.num_words();
  CsrBuilder cv(cv_header);
  {
    std::uint32_t current = 0;
    for (const auto& p : by_context) {
      while (current < p.context.value) {
        cv.end_row();
        ++current;
      }
      const float s = score(p, Direction::ContextToWord);
      if (s > 0.0f) cv.push(p.word.value, s);
    }
  }
  return MatrixPair{std::move(vc).finish(), std::move(cv).finish()};
}

void check_pair(const MatrixPair& pair) {
  const auto& a = pair.word_rows.header();
  const auto& b = pair.context_rows.header();
  std::string problem;
  if (a.orientation != Orientation::WordRows || b.orientation != Orientation::ContextRows) {
    problem = "orientations";
  } else if (a.fingerprint != b.fingerprint) {
    problem = "fingerprints";
  } else if (a.family != b.family || a.measure != b.measure || a.shift_k != b.shift_k) {
    problem = "configuration";
  } else if (a.rows != b.cols || a.cols != b.rows) {
    problem = "dimensions";
  }
  if (!problem.empty()) throw Error(ErrorKind::MismatchedMatrices, "matrix pair disagrees on " + problem);
}

namespace {

constexpr char kMagic[8] = {'F', 'A', 'C', 'E', 'T', 'C', 'S', 'R'};
constexpr std::size_t kHeaderBytes = 48;

class Writer {
 public:
  explicit Writer(std::size_t reserve) { bytes_.reserve(reserve); }

  template <typename T>
  void put(T value) {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                                 std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint8_t>>;
    const U bits = std::bit_cast<U>(value);
    for (std::size_t i = 0; i < sizeof(U); ++i) bytes_.push_back(static_cast<std::byte>((bits >> (8 * i)) & 0xffU));
  }

  std::vector<std::byte> take() && { return std::move(bytes_); }

 private:
  std::vector<std::byte> bytes_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::byte> bytes) : bytes_(bytes) {}

  template <typename T>
  T get() {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                                 std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint8_t>>;
    if (remaining() < sizeof(U)) throw Error(ErrorKind::Truncated, "matrix data ends early");
    U bits = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) bits |= static_cast<U>(std::to_integer<U>(bytes_[pos_ + i]) << (8 * i));
    pos_ += sizeof(U);
    return std::bit_cast<T>(bits);
  }

  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  std::span<const std::byte> take(std::size_t n) {
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

 private:
  std::span<const std::byte> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::byte> save_matrix(const SparseAssociationMatrix& matrix) {
  const auto& h = matrix.header();
  Writer w(kHeaderBytes + matrix.offsets().size() * 8 + matrix.nnz() * 8);
  for (char ch : kMagic) w.put(static_cast<std::uint8_t>(ch));
  w.put(kMatrixFormatVersion);
  w.put(static_cast<std::uint8_t>(h.orientation));
  w.put(static_cast<std::uint8_t>(h.family));
  w.put(static_cast<std::uint8_t>(h.measure));
  w.put(static_cast<std::uint8_t>(h.prefix_masked ? 1 : 0));
  w.put(h.shift_k);
  w.put(h.fingerprint);
  w.put(h.rows);
  w.put(h.cols);
  w.put(matrix.nnz());
  for (auto o : matrix.offsets()) w.put(o);
  for (auto c : matrix.columns()) w.put(c);
  for (auto s : matrix.scores()) w.put(s);
  return std::move(w).take();
}

SparseAssociationMatrix load_matrix(std::span<const std::byte> bytes) {
  if (bytes.size() < sizeof(kMagic)) throw Error(ErrorKind::Truncated, "matrix data shorter than its magic");
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw Error(ErrorKind::BadMagic, "not a facet matrix (bad magic)");
  }
  Reader r(bytes.subspan(sizeof(kMagic)));
  const auto version = r.get<std::uint32_t>();
  if (version != kMatrixFormatVersion) {
    throw Error(ErrorKind::VersionMismatch, "matrix format version " + std::to_string(version) + ", expected " +
                                                std::to_string(kMatrixFormatVersion));
  }
  MatrixHeader h;
  const auto orientation = r.get<std::uint8_t>();
  const auto family = r.get<std::uint8_t>();
  const auto measure = r.get<std::uint8_t>();
  const auto flags = r.get<std::uint8_t>();
  if (orientation > 1 || family > 1 || measure > 1 || flags > 1) {
    throw Error(ErrorKind::Corrupt, "matrix header has invalid enum fields");
  }
  h.orientation = static_cast<Orientation>(orientation);
  h.family = static_cast<ContextFamily>(family);
  h.measure = static_cast<Measure>(measure);
  h.prefix_masked = flags == 1;
  h.shift_k = r.get<double>();
  h.fingerprint = r.get<std::uint64_t>();
  h.rows = r.get<std::uint32_t>();
  h.cols = r.get<std::uint32_t>();
  const auto nnz = r.get<std::uint64_t>();

  const std::uint64_t want = (static_cast<std::uint64_t>(h.rows) + 1) * 8;
  if (nnz > (std::uint64_t{1} << 40)) throw Error(ErrorKind::Corrupt, "implausible nonzero count");
  if (r.remaining() < want + nnz * 8) throw Error(ErrorKind::Truncated, "matrix data ends early");
  if (r.remaining() > want + nnz * 8) throw Error(ErrorKind::Corrupt, "trailing bytes after matrix data");

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(h.rows) + 1);
  for (auto& o : offsets) o = r.get<std::uint64_t>();
  std::vector<std::uint32_t> columns(nnz);
  for (auto& c : columns) c = r.get<std::uint32_t>();
  std::vector<float> scores(nnz);
  for (auto& s : scores) s = r.get<float>();
  return SparseAssociationMatrix(h, std::move(offsets), std::move(columns), std::move(scores));
}

void save_matrix_file(const SparseAssociationMatrix& matrix, const std::filesystem::path& path) {
  const auto bytes = save_matrix(matrix);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

SparseAssociationMatrix load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_matrix(std::as_bytes(std::span(raw)));
}

}  // namespace facet
