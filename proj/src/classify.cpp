#include "terncode/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "terncode/extension.hpp"

namespace terncode {
namespace {

std::string generator_bytes(const LinearCode& c) {
    return std::string(c.generator().data.begin(), c.generator().data.end());
}

Certificate zero_code_certificate(std::size_t n) {
    Certificate cert;
    for (const std::uint32_t v : {static_cast<std::uint32_t>(n), 0u, 0u, 0u}) {
        cert.push_back(static_cast<char>(v & 0xff));
        cert.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    return cert;
}

struct CanonTask {
    Certificate cert;
    std::vector<Monomial> gens;
};

std::vector<CanonTask> canonicalize_all(const std::vector<LinearCode>& candidates,
                                        std::size_t cap, unsigned threads) {
    std::vector<CanonTask> results(candidates.size());
    if (candidates.empty()) return results;

    auto work = [&](std::size_t i) {
        CanonicalCode cc = canonicalize(candidates[i], cap);
        results[i] = CanonTask{std::move(cc.certificate), std::move(cc.aut_generators)};
    };

    if (threads <= 1 || candidates.size() < 2) {
        for (std::size_t i = 0; i < candidates.size(); ++i) work(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    constexpr std::size_t kChunk = 64;

    auto worker = [&] {
        try {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t begin = next.fetch_add(kChunk);
                if (begin >= candidates.size()) return;
                const std::size_t end = std::min(begin + kChunk, candidates.size());
                for (std::size_t i = begin; i < end; ++i) work(i);
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    };

    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(candidates.size()));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace

std::map<std::size_t, std::size_t> counts_by_min_weight(const ClassificationManifest& m) {
    std::map<std::size_t, std::size_t> counts;
    for (const CodeRecord& r : m.records) ++counts[r.min_weight];
    return counts;
}

std::vector<CodeRecord> dedupe_batch(const std::vector<LinearCode>& candidates, std::size_t cap,
                                     unsigned threads) {
    const std::vector<CanonTask> canon = canonicalize_all(candidates, cap, threads);

    std::vector<CodeRecord> records;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!seen.insert(canon[i].cert).second) continue;
        CodeRecord rec;
        rec.code = candidates[i];
        rec.certificate = canon[i].cert;
        rec.min_weight = minimum_weight(rec.code, cap);
        rec.dual_dist = dual_distance(rec.code, cap);
        rec.aut_order = aut_order_from_generators(rec.code.length(), canon[i].gens);
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(),
              [](const CodeRecord& a, const CodeRecord& b) { return a.certificate < b.certificate; });
    return records;
}

Classifier::Classifier(ClassifyOptions opts) : opts_(std::move(opts)) {}

void Classifier::note(int n, int k, const std::string& msg) const {
    if (opts_.progress) {
        opts_.progress("[classify] n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + msg);
    }
}

const ClassificationManifest& Classifier::classify_so(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw ArgumentError("need n >= 1 and 0 <= k <= n");
    const auto key = std::make_pair(n, k);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    if (opts_.resume && !opts_.out_dir.empty()) {
        const std::filesystem::path path = manifest_path(opts_.out_dir, n, k);
        if (std::filesystem::exists(path)) {
            ClassificationManifest m = load_manifest(path, opts_.verify_sample, opts_.cap);
            if (m.n != n || m.k != k) {
                throw AuditError("manifest " + path.string() + " labels the wrong parameters");
            }
            if (!m.complete) {
                throw AuditError("manifest " + path.string() + " is incomplete; refusing to build on it");
            }
            m.provenance = "loaded from " + path.string();
            note(n, k, "resumed classes=" + std::to_string(m.records.size()));
            return memo_.emplace(key, std::move(m)).first->second;
        }
    }

    ClassificationManifest m = build(n, k);
    if (!opts_.out_dir.empty()) {
        std::filesystem::create_directories(opts_.out_dir);
        save_manifest(m, manifest_path(opts_.out_dir, n, k));
    }
    if (!m.complete) {
        throw AuditError("classification of n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " left residual mass " + m.mass.residual.get_str());
    }
    return memo_.emplace(key, std::move(m)).first->second;
}

ClassificationManifest Classifier::build(int n, int k) {
    const auto start = std::chrono::steady_clock::now();
    ClassificationManifest m;
    m.n = n;
    m.k = k;

    if (k == 0) {
        CodeRecord rec;
        rec.code = LinearCode::zero(static_cast<std::size_t>(n));
        rec.min_weight = 0;
        rec.dual_dist = 1;  // the dual is the full space, which has weight-1 words
        rec.aut_order = monomial_group_order(n);
        rec.certificate = zero_code_certificate(static_cast<std::size_t>(n));
        m.records.push_back(std::move(rec));
        m.mass = audit_orders(n, k, {m.records[0].aut_order});
        m.complete = m.mass.residual == 0;
        m.provenance = "trivial";
        return m;
    }

    if (static_cast<std::size_t>(k) > max_so_dimension(static_cast<std::size_t>(n))) {
        m.mass = audit_orders(n, k, {});
        m.complete = m.mass.residual == 0;  // expected count is 0 above the maximal dimension
        m.provenance = "above maximal dimension";
        return m;
    }

    std::vector<LinearCode> candidates;
    std::unordered_set<std::string> spans;
    const auto add_candidate = [&](LinearCode c) {
        if (spans.insert(generator_bytes(c)).second) candidates.push_back(std::move(c));
    };

    const ClassificationManifest& shorter = classify_so(n - 1, k - 1);
    for (const CodeRecord& rec : shorter.records) {
        for_each_lengthening(rec.code, opts_.d_min, opts_.cap,
                             [&](LinearCode c) { add_candidate(std::move(c)); });
    }
    if (static_cast<std::size_t>(k) <= max_so_dimension(static_cast<std::size_t>(n - 1))) {
        const ClassificationManifest& same_dim = classify_so(n - 1, k);
        for (const CodeRecord& rec : same_dim.records) add_candidate(zero_extend(rec.code));
    }

    m.records = dedupe_batch(candidates, opts_.cap, opts_.threads);

    std::vector<mpz_class> orders;
    orders.reserve(m.records.size());
    for (const CodeRecord& rec : m.records) orders.push_back(rec.aut_order);
    m.mass = audit_orders(n, k, orders);
    m.complete = m.mass.residual == 0;

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    m.provenance = "candidates=" + std::to_string(candidates.size()) +
                   " classes=" + std::to_string(m.records.size()) +
                   " ms=" + std::to_string(elapsed.count());
    note(n, k, m.provenance);
    return m;
}

ClassificationManifest Classifier::classify_maximal(int n) {
    const int k = static_cast<int>(max_so_dimension(static_cast<std::size_t>(n)));
    ClassificationManifest m = classify_so(n, k);
    for (const CodeRecord& rec : m.records) {
        if (k > 0 && !is_maximal_self_orthogonal(rec.code, opts_.cap)) {
            throw AuditError("representative at the maximal dimension is not maximal");
        }
    }
    m.maximal_only = true;
    return m;
}

std::filesystem::path manifest_path(const std::filesystem::path& dir, int n, int k) {
    return dir / ("so_n" + std::to_string(n) + "_k" + std::to_string(k) + ".manifest");
}

void save_manifest(const ClassificationManifest& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot open '" + path.string() + "' for writing");
    out << "MANIFEST n=" << m.n << " k=" << m.k << " classes=" << m.records.size()
        << " complete=" << (m.complete ? 1 : 0) << '\n';
    out << "MASS expected=" << m.mass.expected.get_str()
        << " accumulated=" << m.mass.accumulated.get_str() << '\n';
    for (const CodeRecord& rec : m.records) {
        out << "CLASS d=" << rec.min_weight << " dd=" << rec.dual_dist
            << " aut=" << rec.aut_order.get_str() << " cert=" << cert_hex(rec.certificate) << '\n';
        for (std::size_t i = 0; i < rec.code.dimension(); ++i) {
            out << to_string(rec.code.generator().row(i)) << '\n';
        }
    }
    if (!out) throw ArgumentError("failed writing '" + path.string() + "'");
}

namespace {

std::uint64_t parse_u64_field(const std::string& token, const std::string& key, std::size_t line) {
    if (token.size() <= key.size() || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=') {
        throw ParseError("expected field '" + key + "='", line);
    }
    const std::string value = token.substr(key.size() + 1);
    std::size_t used = 0;
    std::uint64_t parsed = 0;
    try {
        parsed = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw ParseError("field '" + key + "' is not a number", line);
    }
    if (used != value.size()) throw ParseError("field '" + key + "' is not a number", line);
    return parsed;
}

mpz_class parse_mpz_field(const std::string& token, const std::string& key, std::size_t line) {
    if (token.size() <= key.size() || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=') {
        throw ParseError("expected field '" + key + "='", line);
    }
    const std::string value = token.substr(key.size() + 1);
    mpz_class parsed;
    if (value.empty() || mpz_set_str(parsed.get_mpz_t(), value.c_str(), 10) != 0) {
        throw ParseError("field '" + key + "' is not a decimal integer", line);
    }
    return parsed;
}

Certificate parse_cert_field(const std::string& token, std::size_t line) {
    const std::string key = "cert";
    if (token.size() <= key.size() || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=') {
        throw ParseError("expected field 'cert='", line);
    }
    const std::string hex = token.substr(key.size() + 1);
    if (hex.size() % 2 != 0) throw ParseError("certificate hex has odd length", line);
    Certificate cert;
    cert.reserve(hex.size() / 2);
    const auto nibble = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw ParseError("certificate hex has invalid digit", line);
    };
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        cert.push_back(static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    }
    return cert;
}

}  // namespace

ClassificationManifest load_manifest(const std::filesystem::path& path, std::size_t verify_sample,
                                     std::size_t cap) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open '" + path.string() + "'");

    std::string line;
    std::size_t lineno = 0;
    const auto next_line = [&]() -> std::string& {
        if (!std::getline(in, line)) throw ParseError("unexpected end of manifest", lineno + 1);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    };

    ClassificationManifest m;

    {
        std::istringstream head(next_line());
        std::string tag, tn, tk, tclasses, tcomplete;
        if (!(head >> tag >> tn >> tk >> tclasses >> tcomplete) || tag != "MANIFEST") {
            throw ParseError("expected MANIFEST header", lineno);
        }
        m.n = static_cast<int>(parse_u64_field(tn, "n", lineno));
        m.k = static_cast<int>(parse_u64_field(tk, "k", lineno));
        const std::uint64_t classes = parse_u64_field(tclasses, "classes", lineno);
        const std::uint64_t complete = parse_u64_field(tcomplete, "complete", lineno);
        if (complete > 1) throw ParseError("complete flag must be 0 or 1", lineno);
        m.complete = complete == 1;
        if (m.n < 1 || m.k < 0 || m.k > m.n) throw ParseError("invalid n or k", lineno);
        m.records.reserve(classes);

        std::istringstream massline(next_line());
        std::string mtag, texpected, taccumulated;
        if (!(massline >> mtag >> texpected >> taccumulated) || mtag != "MASS") {
            throw ParseError("expected MASS line", lineno);
        }
        m.mass.n = m.n;
        m.mass.k = m.k;
        m.mass.expected = parse_mpz_field(texpected, "expected", lineno);
        m.mass.accumulated = parse_mpz_field(taccumulated, "accumulated", lineno);

        for (std::uint64_t c = 0; c < classes; ++c) {
            std::istringstream cls(next_line());
            std::string ctag, td, tdd, taut, tcert;
            if (!(cls >> ctag >> td >> tdd >> taut >> tcert) || ctag != "CLASS") {
                throw ParseError("expected CLASS line", lineno);
            }
            CodeRecord rec;
            rec.min_weight = parse_u64_field(td, "d", lineno);
            rec.dual_dist = parse_u64_field(tdd, "dd", lineno);
            rec.aut_order = parse_mpz_field(taut, "aut", lineno);
            rec.certificate = parse_cert_field(tcert, lineno);

            std::vector<TritVec> rows;
            for (int i = 0; i < m.k; ++i) {
                const std::string& row = next_line();
                if (row.size() != static_cast<std::size_t>(m.n)) {
                    throw ParseError("generator row must have n characters", lineno);
                }
                try {
                    rows.push_back(trits_from_string(row));
                } catch (const ArgumentError& e) {
                    throw ParseError(e.what(), lineno);
                }
            }
            if (m.k == 0) {
                rec.code = LinearCode::zero(static_cast<std::size_t>(m.n));
            } else {
                rec.code = LinearCode::from_rows(rows);
                if (rec.code.dimension() != static_cast<std::size_t>(m.k)) {
                    throw AuditError("manifest rows of class " + std::to_string(c) +
                                     " are linearly dependent");
                }
                for (int i = 0; i < m.k; ++i) {
                    if (!std::equal(rows[i].begin(), rows[i].end(),
                                    rec.code.generator().row(i).begin())) {
                        throw AuditError("manifest rows of class " + std::to_string(c) +
                                         " are not a reduced basis");
                    }
                }
            }
            m.records.push_back(std::move(rec));
        }
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) throw ParseError("trailing content after last class", lineno);
        }
    }

    // Semantic revalidation.
    std::vector<mpz_class> orders;
    orders.reserve(m.records.size());
    for (std::size_t i = 0; i < m.records.size(); ++i) {
        const CodeRecord& rec = m.records[i];
        if (!is_self_orthogonal(rec.code)) {
            throw AuditError("class " + std::to_string(i) + " is not self-orthogonal");
        }
        if (i > 0 && !(m.records[i - 1].certificate < rec.certificate)) {
            throw AuditError("manifest records are not sorted by distinct certificates");
        }
        orders.push_back(rec.aut_order);
    }
    const MassAudit recomputed = audit_orders(m.n, m.k, orders);
    if (recomputed.expected != m.mass.expected || recomputed.accumulated != m.mass.accumulated) {
        throw AuditError("stored mass lines disagree with the stored automorphism orders");
    }
    m.mass = recomputed;
    if (m.complete != (m.mass.residual == 0)) {
        throw AuditError("stored completeness flag disagrees with the mass residual");
    }

    if (!m.records.empty() && verify_sample > 0 && m.k > 0) {
        const std::size_t sample = std::min(verify_sample, m.records.size());
        for (std::size_t s = 0; s < sample; ++s) {
            const std::size_t i = s * m.records.size() / sample;
            const CodeRecord& rec = m.records[i];
            if (canonical_certificate(rec.code, cap) != rec.certificate) {
                throw AuditError("stored certificate of class " + std::to_string(i) +
                                 " does not match a recomputation");
            }
            if (static_cast<std::size_t>(minimum_weight(rec.code, cap)) != rec.min_weight ||
                static_cast<std::size_t>(dual_distance(rec.code, cap)) != rec.dual_dist) {
                throw AuditError("stored weights of class " + std::to_string(i) +
                                 " do not match a recomputation");
            }
        }
    }
    return m;
}

}  // namespace terncode
