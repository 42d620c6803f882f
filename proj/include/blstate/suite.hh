#pragma once

#include <blstate/claims.hh>

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

namespace blstate {

struct ClaimRecord {
    std::string claim;
    std::string instance;
    Verdict verdict = Verdict::pass;
    std::string witness;
    std::string detail;
    std::chrono::microseconds elapsed{0};
};

struct SuiteOptions {
    std::vector<std::string> claims; // empty means every claim
    std::size_t workers = 1;
    bool keep_going = false;
};

struct SuiteReport {
    std::vector<ClaimRecord> records;
    bool stopped_early = false;

    bool passed() const;
};

/// The built-in corpus, in report order.
std::vector<CorpusInstance> default_corpus();

/// Every *.json document in `dir`, sorted by file name. Throws ParseError
/// or ValidationError for a bad document and std::invalid_argument when the
/// directory holds no documents.
std::vector<CorpusInstance> load_corpus(const std::filesystem::path & dir);

/// Records are ordered by claim (catalogue order) and then by instance
/// (corpus order), whatever the worker count. Without keep_going the report
/// ends at the first failing record. Unknown claim ids throw
/// std::invalid_argument.
SuiteReport run_suite(const std::vector<CorpusInstance> & corpus, const SuiteOptions & options);

std::string report_text(const SuiteReport & report, bool timings = false);
std::string report_json(const SuiteReport & report, bool timings = false);

} // namespace blstate
