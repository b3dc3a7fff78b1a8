#include "lmmscan/kinship.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "lmmscan/error.hpp"

namespace lmmscan {

void GenotypeMatrix::validate() const {
  if (static_cast<Eigen::Index>(snp_ids.size()) != dosages.rows())
    throw IoError("genotype matrix: snp_ids/dosage row count mismatch");
  std::set<std::string> seen;
  for (const auto& id : snp_ids) {
    if (!seen.insert(id).second) throw IoError("duplicate SNP id: " + id);
  }
  for (Eigen::Index s = 0; s < dosages.rows(); ++s) {
    Eigen::Index n_obs = 0;
    for (Eigen::Index i = 0; i < dosages.cols(); ++i) {
      const double d = dosages(s, i);
      if (dosage_missing(d)) continue;
      ++n_obs;
      if (d < 0.0 || d > 2.0) {
        std::ostringstream msg;
        msg << "dosage out of range for SNP " << snp_ids[s] << ", subject " << (i + 1);
        throw IoError(msg.str());
      }
    }
    if (n_obs == 0) throw IoError("SNP " + snp_ids[s] + " has no non-missing dosages");
  }
}

namespace {

// Returns the in-sample allele-1 frequency of one dosage row.
double row_frequency(std::string_view snp_id, std::span<const double> dosages) {
  double sum = 0.0;
  std::size_t n_obs = 0;
  for (double d : dosages) {
    if (dosage_missing(d)) continue;
    sum += d;
    ++n_obs;
  }
  if (n_obs == 0)
    throw IoError("SNP " + std::string(snp_id) + " has no non-missing dosages");
  return sum / (2.0 * static_cast<double>(n_obs));
}

}  // namespace

AlleleFrequencies allele_frequencies(const GenotypeMatrix& g) {
  AlleleFrequencies af;
  af.p.reserve(static_cast<std::size_t>(g.n_snps()));
  std::vector<double> buf(static_cast<std::size_t>(g.n_subjects()));
  for (Eigen::Index s = 0; s < g.n_snps(); ++s) {
    for (Eigen::Index i = 0; i < g.n_subjects(); ++i)
      buf[static_cast<std::size_t>(i)] = g.dosages(s, i);
    af.p.push_back(row_frequency(g.snp_ids[s], buf));
  }
  return af;
}

RelatednessAccumulator::RelatednessAccumulator(Eigen::Index n_subjects, double maf_floor)
    : n_(n_subjects), maf_floor_(maf_floor) {
  if (n_ < 1) throw NumericError("relatedness: need at least one subject");
  if (maf_floor_ < 0.0 || maf_floor_ >= 0.5)
    throw NumericError("relatedness: maf_floor must be in [0, 0.5)");
  sum_ = Eigen::MatrixXd::Zero(n_, n_);
  dev_.resize(static_cast<std::size_t>(n_));
}

void RelatednessAccumulator::add_snp(std::string_view snp_id, std::span<const double> dosages) {
  if (static_cast<Eigen::Index>(dosages.size()) != n_)
    throw IoError("SNP " + std::string(snp_id) + ": dosage count does not match subject count");
  const double p = row_frequency(snp_id, dosages);
  const double maf = std::min(p, 1.0 - p);
  if (maf <= maf_floor_) {
    ++s_skipped_;
    return;
  }
  const double denom = 2.0 * p * (1.0 - p);
  const double inv_sd = 1.0 / std::sqrt(denom);
  for (Eigen::Index i = 0; i < n_; ++i) {
    const double d = dosages[static_cast<std::size_t>(i)];
    // Missing entries are imputed at 2p and contribute zero deviation.
    dev_[static_cast<std::size_t>(i)] = dosage_missing(d) ? 0.0 : (d - 2.0 * p) * inv_sd;
  }
  Eigen::Map<const Eigen::VectorXd> z(dev_.data(), n_);
  sum_.selfadjointView<Eigen::Lower>().rankUpdate(z, 1.0);
  ++s_used_;
}

void RelatednessAccumulator::merge(const RelatednessAccumulator& other) {
  if (other.n_ != n_) throw NumericError("relatedness merge: subject count mismatch");
  sum_ += other.sum_;
  s_used_ += other.s_used_;
  s_skipped_ += other.s_skipped_;
}

RelatednessMatrix RelatednessAccumulator::finish() const {
  if (s_used_ == 0) throw NumericError("no polymorphic SNPs");
  RelatednessMatrix r;
  r.n = n_;
  r.s_used = s_used_;
  Eigen::MatrixXd full = sum_.selfadjointView<Eigen::Lower>();
  full /= static_cast<double>(s_used_);
  // Erase any floating-point asymmetry left by the accumulation.
  r.values = 0.5 * (full + full.transpose());
  return r;
}

RelatednessMatrix compute_relatedness(const GenotypeMatrix& g, double maf_floor) {
  g.validate();
  RelatednessAccumulator acc(g.n_subjects(), maf_floor);
  std::vector<double> buf(static_cast<std::size_t>(g.n_subjects()));
  for (Eigen::Index s = 0; s < g.n_snps(); ++s) {
    for (Eigen::Index i = 0; i < g.n_subjects(); ++i)
      buf[static_cast<std::size_t>(i)] = g.dosages(s, i);
    acc.add_snp(g.snp_ids[s], buf);
  }
  return acc.finish();
}

}  // namespace lmmscan
