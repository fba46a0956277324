#pragma once

// Documents emitted by the command-line tool. Everything here is deterministic
// for identical input and options.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/document.hpp"
#include "kstab/error.hpp"
#include "kstab/oracle.hpp"
#include "kstab/toric_fano.hpp"

namespace kstab {

enum class Format { Json, Text, Csv };
/// Throws InvalidArgument for anything but json, text or csv.
Format parse_format(std::string_view s);

/// 0 success, 1 bad input, 2 not Fano, 3 unsupported, 4 oracle mismatch.
int exit_code(ErrorCode code);

/// Outcome of the brute-force cross-checks. `counterexample` is set on the
/// first failure, in the input schema.
struct OracleSection {
  ojson json;
  std::optional<ojson> counterexample;
};

/// Box sampling against the delta, alpha_bound and margin closed forms plus the
/// numeric integral of every per-ray curve.
OracleSection oracle_section(const ToricFano& x, int radius);

struct ReportOptions {
  int search_radius = 8;
  bool oracle = false;
};

/// `oracle`, when requested, is filled with the cross-check outcome.
ojson report_json(const ToricFano& x, const ReportOptions& opt, OracleSection* oracle = nullptr);

/// Generic renderings of a JSON document: indented json, "path: value" lines,
/// or a two-column field,value CSV with a header row.
std::string render(const ojson& doc, Format f);

struct DeltaKRow {
  std::int64_t k;
  std::int64_t n_k;
  Rat sk_at_witness;
  Rat delta_k;
  LatticeVec witness;
  Rat gap;  // delta - delta_k
  bool index_warning;
};

/// Throws InvalidArgument for k <= 0.
std::vector<DeltaKRow> deltak_table(const ToricFano& x, const std::vector<std::int64_t>& ks, int radius);
std::string deltak_csv(const std::vector<DeltaKRow>& rows);
ojson deltak_json(const std::vector<DeltaKRow>& rows);

/// Exact curve, its integral and the Okounkov barycenter check at eps.
ojson curve_json(const ToricFano& x, const LatticeVec& u, const Rat& eps);
/// x,vol samples in floating point for plotting: `samples` + 1 evenly spaced
/// points on [0, width].
std::string curve_samples_csv(const ToricFano& x, const LatticeVec& u, int samples);

/// List of catalog entries with descriptions.
ojson catalog_listing();

/// Runs the oracle gate over a seeded corpus.
struct CorpusGate {
  ojson json;
  std::vector<ojson> counterexamples;
};
CorpusGate corpus_gate(const oracle::CorpusSpec& spec, int radius);

/// "1,0,-1" -> {1, 0, -1}. Throws MalformedInput.
std::vector<std::int64_t> parse_int_list(std::string_view s);

}  // namespace kstab
