#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace lmmscan {

// Dosage matrices use NaN as the missing marker.
inline bool dosage_missing(double d) { return std::isnan(d); }

// S x n genotype dosages, one row per SNP, values in [0,2] or missing.
struct GenotypeMatrix {
  std::vector<std::string> snp_ids;
  Eigen::MatrixXd dosages;  // S x n

  Eigen::Index n_snps() const { return dosages.rows(); }
  Eigen::Index n_subjects() const { return dosages.cols(); }

  // Checks dosage bounds, per-row non-missing counts and id uniqueness.
  void validate() const;
};

struct AlleleFrequencies {
  std::vector<double> p;
};

// Genome-wide correlation matrix of the subjects. s_used counts the SNPs
// that actually contributed (polymorphic after the MAF floor).
struct RelatednessMatrix {
  Eigen::Index n = 0;
  Eigen::MatrixXd values;
  std::size_t s_used = 0;
};

// In-sample frequency of allele 1: mean non-missing dosage / 2, per SNP.
AlleleFrequencies allele_frequencies(const GenotypeMatrix& g);

// Streaming builder for the relatedness matrix: feed one SNP row at a time,
// so the full dosage matrix never needs to be resident. Partial accumulators
// built over disjoint SNP blocks can be merged; merging in a fixed block
// order keeps the result deterministic.
class RelatednessAccumulator {
public:
  explicit RelatednessAccumulator(Eigen::Index n_subjects, double maf_floor = 0.0);

  // Accumulates one SNP. Missing dosages are mean-imputed (zero deviation).
  // Monomorphic SNPs and SNPs with min(p,1-p) <= maf_floor are skipped.
  // Throws if the row is entirely missing.
  void add_snp(std::string_view snp_id, std::span<const double> dosages);

  void merge(const RelatednessAccumulator& other);

  // Divides by s_used and symmetrizes. Throws "no polymorphic SNPs" when
  // nothing contributed.
  RelatednessMatrix finish() const;

  std::size_t s_used() const { return s_used_; }
  std::size_t s_skipped() const { return s_skipped_; }

private:
  Eigen::Index n_;
  double maf_floor_;
  Eigen::MatrixXd sum_;      // accumulated outer products, lower triangle
  std::vector<double> dev_;  // per-SNP scratch
  std::size_t s_used_ = 0;
  std::size_t s_skipped_ = 0;
};

// Whole-matrix convenience wrapper over the accumulator.
RelatednessMatrix compute_relatedness(const GenotypeMatrix& g, double maf_floor = 0.0);

}  // namespace lmmscan
