#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "permspec/algebra.hpp"
#include "permspec/perm.hpp"
#include "permspec/spectral.hpp"

namespace permspec::report {

inline constexpr const char *kToolVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 7;

using Json = nlohmann::ordered_json;

/// Bad target, flag or out-of-range n. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CheckRecord {
  std::string id;
  int n = 0;
  CheckStatus status = CheckStatus::Fail;
  std::optional<std::string> witness;
  std::int64_t wall_time_ms = 0;
  Json details = Json::object();
};

struct VerificationReport {
  std::string target;
  int n = 0;
  std::optional<StatisticKind> kind;
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckRecord> checks;
  std::vector<Discrepancy> discrepancies;

  bool any_failed() const;
  int exit_code() const { return any_failed() ? 1 : 0; }
};

struct VerifyOptions {
  std::string target;
  std::optional<int> n;
  std::uint64_t seed = kDefaultSeed;
  bool allow_slow = false;
};

struct NRange {
  int default_n, min, max;
};

/// Every accepted target name, in the order `all` runs them.
const std::vector<std::string> &targets();

/// Default and admissible n for a target. Throws UsageError for unknown names.
NRange n_range(const std::string &target, bool allow_slow);

/// Runs the checks mapped to the target. `all` runs every target, each at
/// the requested n clamped into its own range.
VerificationReport verify(const VerifyOptions &options);

Json to_json(const VerificationReport &report, bool timing);

/// f2 = S^2 and f3 = S^3 for the inversion element, Pi_n = S^2 for the
/// descent element, brute force against convolution at every permutation.
CheckRecord cross_validate(int n);

/// Kernel dimensions of the specialized matrix against the multiplicities of
/// `claim`. Uses X = 1 when the eigenvalues stay distinct there, otherwise a
/// random positive point.
CheckRecord kernel_check(const std::string &id, const SpectrumClaim &claim,
                         std::uint64_t seed);

struct SpectrumOptions {
  StatisticKind kind = StatisticKind::DesX;
  int n = 1;
  std::uint64_t seed = kDefaultSeed;
  bool allow_slow = false;
};

/// Verified spectrum as JSON: eigenvalues with stated and verified
/// multiplicities, status and discrepancies.
Json spectrum_json(const SpectrumOptions &options);
/// `{36: 1, -6: 6, 0: 17}` followed by status and discrepancy lines.
std::string spectrum_text(const SpectrumOptions &options);

/// Quoted CSV, one row per line, lexicographic row and column order.
std::string matrix_csv(const PolynomialMatrix &m);
Json matrix_json(const PolynomialMatrix &m, StatisticKind kind, int n);

} // namespace permspec::report
