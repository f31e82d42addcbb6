#ifndef TERNCODE_CLASSIFY_HPP
#define TERNCODE_CLASSIFY_HPP

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "terncode/code.hpp"
#include "terncode/equivalence.hpp"
#include "terncode/mass.hpp"

namespace terncode {

struct CodeRecord {
    LinearCode code;
    std::size_t min_weight = 0;  // 0 for the zero code
    std::size_t dual_dist = 0;
    mpz_class aut_order;
    Certificate certificate;
};

struct ClassificationManifest {
    int n = 0;
    int k = 0;
    bool complete = false;
    bool maximal_only = false;
    std::vector<CodeRecord> records;  // sorted by certificate bytes
    MassAudit mass;
    std::string provenance;  // in-memory notes, not persisted
};

std::map<std::size_t, std::size_t> counts_by_min_weight(const ClassificationManifest& m);

struct ClassifyOptions {
    std::filesystem::path out_dir;  // empty: keep manifests in memory only
    bool resume = false;            // reuse manifests already present in out_dir
    unsigned threads = 1;
    std::size_t cap = kDefaultEnumCap;
    int d_min = 3;                  // weight floor passed to the lengthening sweep
    std::size_t verify_sample = 4;  // certificates recomputed per loaded manifest
    std::function<void(const std::string&)> progress;
};

// Classifies candidates up to monomial equivalence: canonical certificates
// are computed (in parallel when threads > 1), duplicates dropped in
// candidate order, and the surviving representatives returned sorted by
// certificate. The output is byte-for-byte independent of the thread count.
std::vector<CodeRecord> dedupe_batch(const std::vector<LinearCode>& candidates, std::size_t cap,
                                     unsigned threads = 1);

// Recursive classifier for self-orthogonal codes. classify_so(n, k) builds
// candidates by lengthening every [n-1, k-1] representative and zero-
// extending every [n-1, k] representative, deduplicates, and audits the
// result against the mass formula. A nonzero residual means classes were
// missed: the manifest is persisted for inspection and AuditError is thrown.
class Classifier {
public:
    explicit Classifier(ClassifyOptions opts = {});

    const ClassificationManifest& classify_so(int n, int k);

    // Classification at the maximal self-orthogonal dimension, with each
    // representative re-checked to be maximal.
    ClassificationManifest classify_maximal(int n);

private:
    ClassificationManifest build(int n, int k);
    void note(int n, int k, const std::string& msg) const;

    ClassifyOptions opts_;
    std::map<std::pair<int, int>, ClassificationManifest> memo_;
};

std::filesystem::path manifest_path(const std::filesystem::path& dir, int n, int k);
void save_manifest(const ClassificationManifest& m, const std::filesystem::path& path);

// Parses and revalidates a persisted manifest: rows must be the RREF basis
// of a self-orthogonal code, the mass lines must match a recomputation from
// the stored automorphism orders, records must be sorted with distinct
// certificates, and a sample of certificates is recomputed from scratch.
ClassificationManifest load_manifest(const std::filesystem::path& path,
                                     std::size_t verify_sample = 4,
                                     std::size_t cap = kDefaultEnumCap);

}  // namespace terncode

#endif
