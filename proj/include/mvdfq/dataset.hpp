#pragma once

#include <array>
#include <string>
#include <vector>

#include "mvdfq/sequence.hpp"

namespace mvdfq {

struct ManifestRow {
  std::string id;
  std::string label;
  std::string group;
  std::string path;  // resolved against the manifest's directory
};

// TSV with columns id, label, group (may be empty), path
std::vector<ManifestRow> load_manifest(const std::string& path);

// Reads every manifest row's headerless CSV (n lines of R comma-separated
// reals, time-major) and transposes into R x n.
std::vector<Sequence> ingest_csv(const std::string& manifest_path);

// Expands each residue of each FASTA record to its 20-value BLOSUM62 row
// (R=20). labels_path is a TSV of id, label (optional third group column).
std::vector<Sequence> ingest_fasta(const std::string& fasta_path, const std::string& labels_path);

// residue order ARNDCQEGHILKMFPSTWYV
extern const std::string kResidues;
const std::array<std::array<double, 20>, 20>& blosum62();

}  // namespace mvdfq
