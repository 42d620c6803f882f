#include <blstate/suite.hh>
#include <blstate/constructors.hh>
#include <blstate/document.hh>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace blstate {

bool SuiteReport::passed() const
{
    return ! stopped_early
        && std::none_of(records.begin(), records.end(), [](const ClaimRecord & r) { return r.verdict == Verdict::fail; });
}

std::vector<CorpusInstance> default_corpus()
{
    std::vector<CorpusInstance> out;
    for (std::size_t n = 1; n <= 5; ++n)
        out.push_back({"mv-chain(" + std::to_string(n) + ")", mv_chain(n), {}, {}, {}});
    for (std::size_t n = 3; n <= 5; ++n)
        out.push_back({"godel-chain(" + std::to_string(n) + ")", godel_chain(n), {}, {}, {}});

    auto example = four_element_example();
    out.push_back({"example-3-4", example.algebra, {{"sigma", example.op.map()}}, {}, {}});

    const auto s1 = mv_chain(1);
    const auto s2 = mv_chain(2);
    const Comet s1s1(0, {1, 1});
    out.push_back({"S1xS1", s1s1.algebra(), {}, s1s1, s1});
    const Comet s2s2(0, {2, 2});
    out.push_back({"S2xS2", s2s2.algebra(), {}, s2s2, s2});
    const Comet small(1, {1, 1});
    out.push_back({"S1+(S1xS1)", small.algebra(), {}, small, {}});

    const Comet s4s4(0, {4, 4});
    const auto rejected = sigma_a(s4s4, s4s4.embed({0, 4}));
    out.push_back({"S4xS4", s4s4.algebra(), {{"sigma_a", rejected.op.map()}}, s4s4, {}});

    const auto d1 = diagonal_operator(s2, 1);
    const auto d2 = diagonal_operator(s2, 2);
    out.push_back({"example-5-2", d1.algebra, {{"sigma1", d1.op.map()}, {"sigma2", d2.op.map()}}, {}, s2});
    return out;
}

std::vector<CorpusInstance> load_corpus(const std::filesystem::path & dir)
{
    if (! std::filesystem::is_directory(dir))
        throw std::invalid_argument("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto & entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    if (files.empty())
        throw std::invalid_argument("no *.json documents in " + dir.string());
    std::sort(files.begin(), files.end());
    std::vector<CorpusInstance> out;
    for (const auto & f : files) {
        auto loaded = load(read_document(f), f.stem().string());
        out.push_back({std::move(loaded.name), std::move(loaded.algebra), std::move(loaded.operators), {}, {}});
    }
    return out;
}

SuiteReport run_suite(const std::vector<CorpusInstance> & corpus, const SuiteOptions & options)
{
    const auto & catalogue = claim_catalogue();
    std::vector<std::size_t> selected;
    if (options.claims.empty()) {
        for (std::size_t i = 0; i < catalogue.size(); ++i)
            selected.push_back(i);
    } else {
        for (const auto & id : options.claims) {
            const auto it = std::find_if(catalogue.begin(), catalogue.end(), [&](const ClaimInfo & c) { return c.id == id; });
            if (it == catalogue.end())
                throw std::invalid_argument("unknown claim " + id);
            selected.push_back(static_cast<std::size_t>(it - catalogue.begin()));
        }
        std::sort(selected.begin(), selected.end());
        selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    }

    // results[instance][k] is the record for selected[k].
    std::vector<std::vector<ClaimRecord>> results(corpus.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            InstanceContext ctx(corpus[i]);
            for (auto c : selected) {
                const auto start = std::chrono::steady_clock::now();
                auto outcome = check_claim(catalogue[c].id, ctx);
                const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
                results[i].push_back({catalogue[c].id, corpus[i].name, outcome.verdict, std::move(outcome.witness),
                    std::move(outcome.detail), elapsed});
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < std::max<std::size_t>(options.workers, 1); ++w)
            pool.emplace_back(work);
        work();
    }

    SuiteReport report;
    for (std::size_t k = 0; k < selected.size(); ++k)
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            report.records.push_back(std::move(results[i][k]));
            if (report.records.back().verdict == Verdict::fail && ! options.keep_going) {
                report.stopped_early = k + 1 < selected.size() || i + 1 < corpus.size();
                return report;
            }
        }
    return report;
}

namespace {

std::map<Verdict, std::size_t> tally(const SuiteReport & report)
{
    std::map<Verdict, std::size_t> out{{Verdict::pass, 0}, {Verdict::fail, 0}, {Verdict::not_applicable, 0}, {Verdict::logged, 0}};
    for (const auto & r : report.records)
        ++out[r.verdict];
    return out;
}

std::string upper(std::string_view s)
{
    std::string out(s);
    for (auto & c : out)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::string report_text(const SuiteReport & report, bool timings)
{
    std::size_t claim_width = 0, instance_width = 0;
    for (const auto & r : report.records) {
        claim_width = std::max(claim_width, r.claim.size());
        instance_width = std::max(instance_width, r.instance.size());
    }
    std::ostringstream out;
    for (const auto & r : report.records) {
        auto verdict = upper(to_string(r.verdict));
        verdict.resize(7, ' ');
        auto claim = r.claim;
        claim.resize(claim_width, ' ');
        auto instance = r.instance;
        instance.resize(instance_width, ' ');
        std::string line = verdict + claim + "  " + instance;
        if (! r.witness.empty())
            line += "  witness: " + r.witness;
        if (! r.detail.empty())
            line += "  " + r.detail;
        if (timings)
            line += "  [" + std::to_string(r.elapsed.count()) + " us]";
        while (line.ends_with(' '))
            line.pop_back();
        out << line << "\n";
    }
    const auto t = tally(report);
    out << report.records.size() << " records: " << t.at(Verdict::pass) << " pass, " << t.at(Verdict::fail) << " fail, "
        << t.at(Verdict::not_applicable) << " n/a, " << t.at(Verdict::logged) << " logged\n";
    if (report.stopped_early)
        out << "stopped at the first failure (use --keep-going to continue)\n";
    return out.str();
}

std::string report_json(const SuiteReport & report, bool timings)
{
    using Json = nlohmann::ordered_json;
    Json records = Json::array();
    for (const auto & r : report.records) {
        Json j;
        j["claim"] = r.claim;
        j["instance"] = r.instance;
        j["verdict"] = std::string(to_string(r.verdict));
        if (! r.witness.empty())
            j["witness"] = r.witness;
        if (! r.detail.empty())
            j["detail"] = r.detail;
        if (timings)
            j["elapsed_us"] = r.elapsed.count();
        records.push_back(std::move(j));
    }
    const auto t = tally(report);
    Json root;
    root["records"] = std::move(records);
    root["summary"] = {{"records", report.records.size()}, {"pass", t.at(Verdict::pass)}, {"fail", t.at(Verdict::fail)},
        {"not_applicable", t.at(Verdict::not_applicable)}, {"logged", t.at(Verdict::logged)}};
    root["stopped_early"] = report.stopped_early;
    root["passed"] = report.passed();
    return root.dump(2) + "\n";
}

} // namespace blstate
