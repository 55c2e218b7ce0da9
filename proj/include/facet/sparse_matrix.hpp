#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "facet/association.hpp"
#include "facet/ids.hpp"

namespace facet {

enum class Orientation : std::uint8_t {
  WordRows = 0,     // rows are words, columns contexts (V->C)
  ContextRows = 1,  // rows are contexts, columns words (C->V)
};

struct MatrixHeader {
  Orientation orientation = Orientation::WordRows;
  ContextFamily family = ContextFamily::Syntactic;
  Measure measure = Measure::Appmi;
  bool prefix_masked = false;
  double shift_k = kDefaultShift;
  std::uint64_t fingerprint = 0;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;

  friend bool operator==(const MatrixHeader&, const MatrixHeader&) = default;
};

/// Non-owning view of one matrix row. Column ids are strictly increasing.
struct RowView {
  std::span<const std::uint32_t> columns;
  std::span<const float> scores;

  std::size_t size() const noexcept { return columns.size(); }
  bool empty() const noexcept { return columns.empty(); }
  double sum() const noexcept;
};

/// Compressed sparse row matrix of strictly positive association scores.
class SparseAssociationMatrix {
 public:
  SparseAssociationMatrix() = default;

  /// Takes ownership of CSR arrays. Throws Corrupt when the arrays violate
  /// the layout invariants (monotone offsets, sorted in-range columns,
  /// positive finite scores).
  SparseAssociationMatrix(MatrixHeader header, std::vector<std::uint64_t> offsets,
                          std::vector<std::uint32_t> columns, std::vector<float> scores);

  const MatrixHeader& header() const noexcept { return header_; }
  std::uint32_t rows() const noexcept { return header_.rows; }
  std::uint32_t cols() const noexcept { return header_.cols; }
  std::uint64_t nnz() const noexcept { return columns_.size(); }

  RowView row(std::uint32_t index) const;
  /// Stored score or 0 when absent.
  float at(std::uint32_t row, std::uint32_t col) const;

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::span<const std::uint32_t> columns() const noexcept { return columns_; }
  std::span<const float> scores() const noexcept { return scores_; }

  /// Entry-for-entry identity, comparing score bit patterns.
  friend bool operator==(const SparseAssociationMatrix& a, const SparseAssociationMatrix& b);

 private:
  MatrixHeader header_;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::uint32_t> columns_;
  std::vector<float> scores_;
};

/// Row-at-a-time CSR assembly. Rows must be closed in order.
class CsrBuilder {
 public:
  explicit CsrBuilder(MatrixHeader header);

  void push(std::uint32_t col, float score);
  void end_row();
  SparseAssociationMatrix finish() &&;

 private:
  MatrixHeader header_;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::uint32_t> columns_;
  std::vector<float> scores_;
};

/// The two orientations built from one family's counts.
struct MatrixPair {
  SparseAssociationMatrix word_rows;     // V->C
  SparseAssociationMatrix context_rows;  // C->V
};

/// Stable 64-bit digest of a family's counts, stamped into both headers.
std::uint64_t counts_fingerprint(const CooccurrenceCounts& counts, ContextFamily family);

/// Scores every observed cell in both directions; cells whose score clips to
/// zero are omitted.
MatrixPair build_matrices(const CooccurrenceCounts& counts, Measure measure, double shift_k, ContextFamily family);

/// Throws MismatchedMatrices unless the two matrices come from the same
/// counts and configuration in opposite orientations.
void check_pair(const MatrixPair& pair);

// Binary persistence. Little-endian, versioned:
//   magic "FACETCSR", u32 version, u8 orientation, u8 family, u8 measure,
//   u8 flags, f64 shift_k, u64 fingerprint, u32 rows, u32 cols, u64 nnz,
//   u64 offsets[rows+1], u32 columns[nnz], f32 scores[nnz].
inline constexpr std::uint32_t kMatrixFormatVersion = 1;

std::vector<std::byte> save_matrix(const SparseAssociationMatrix& matrix);
SparseAssociationMatrix load_matrix(std::span<const std::byte> bytes);

void save_matrix_file(const SparseAssociationMatrix& matrix, const std::filesystem::path& path);
SparseAssociationMatrix load_matrix_file(const std::filesystem::path& path);

}  // namespace facet
