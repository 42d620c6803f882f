#include "commands.hh"

#include <blstate/constructors.hh>
#include <blstate/families.hh>
#include <blstate/filters.hh>
#include <blstate/operators.hh>
#include <blstate/states.hh>
#include <blstate/suite.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace blstate::cli {

namespace {

/// Recursive descent over constructor expressions.
class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    LoadedAlgebra parse()
    {
        auto out = expression();
        skip_ws();
        if (i_ != text_.size())
            fail("unexpected '" + std::string(1, text_[i_]) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string & message) const { throw ParseError(1, i_ + 1, message); }

    void skip_ws()
    {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
            ++i_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (i_ < text_.size() && text_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (! accept(c))
            fail(std::string("expected '") + c + "'");
    }

    std::string word()
    {
        skip_ws();
        const auto start = i_;
        while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '-' || text_[i_] == '_'))
            ++i_;
        if (start == i_)
            fail("expected a name or number");
        return std::string(text_.substr(start, i_ - start));
    }

    std::size_t number()
    {
        const auto at = i_;
        const auto w = word();
        if (! std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || w.size() > 6) {
            i_ = at;
            fail("expected a number");
        }
        return std::stoul(w);
    }

    std::vector<LoadedAlgebra> algebra_arguments()
    {
        std::vector<LoadedAlgebra> args;
        expect('(');
        do
            args.push_back(expression());
        while (accept(','));
        expect(')');
        return args;
    }

    static std::string joined(const std::string & head, const std::vector<LoadedAlgebra> & args)
    {
        std::string out = head + "(";
        for (std::size_t k = 0; k < args.size(); ++k)
            out += (k ? ", " : "") + args[k].name;
        return out + ")";
    }

    LoadedAlgebra expression()
    {
        skip_ws();
        const auto at = i_;
        auto name = word();
        std::replace(name.begin(), name.end(), '_', '-');
        try {
            if (name == "mv-chain" || name == "godel-chain") {
                expect('(');
                const auto n = number();
                expect(')');
                auto a = name == "mv-chain" ? mv_chain(n) : godel_chain(n);
                return {name + "(" + std::to_string(n) + ")", std::move(a), {}, {}};
            }
            if (name == "example-3-4") {
                auto e = four_element_example();
                return {name, std::move(e.algebra), {{"sigma", e.op.map()}}, {}};
            }
            if (name == "product" || name == "ordinal-sum") {
                const auto args = algebra_arguments();
                std::vector<FiniteBLAlgebra> parts;
                for (const auto & a : args)
                    parts.push_back(a.algebra);
                if (name == "ordinal-sum")
                    return {joined(name, args), ordinal_sum(parts), {}, {}};
                auto p = parts.front();
                for (std::size_t k = 1; k < parts.size(); ++k)
                    p = direct_product(p, parts[k]);
                return {joined(name, args), std::move(p), {}, {}};
            }
            if (name == "diagonal") {
                const auto args = algebra_arguments();
                if (args.size() != 1)
                    fail("diagonal takes one algebra");
                auto d1 = diagonal_operator(args.front().algebra, 1);
                const auto d2 = diagonal_operator(args.front().algebra, 2);
                return {joined(name, args), std::move(d1.algebra), {{"sigma1", d1.op.map()}, {"sigma2", d2.op.map()}}, {}};
            }
            if (name == "comet") {
                expect('(');
                const auto base = number();
                std::vector<std::size_t> factors;
                std::string text = "comet(" + std::to_string(base);
                while (accept(',')) {
                    factors.push_back(number());
                    text += ", " + std::to_string(factors.back());
                }
                expect(')');
                const Comet c(base, factors);
                return {text + ")", c.algebra(), {}, {}};
            }
        } catch (const std::invalid_argument & e) {
            i_ = at;
            fail(e.what());
        }
        i_ = at;
        fail("unknown constructor '" + name + "' (and no such file)");
    }

    std::string_view text_;
    std::size_t i_ = 0;
};

std::string show(const FiniteBLAlgebra & a, std::span<const Element> xs)
{
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + a.label(xs[i]);
    return out + ")";
}

const char * yes(bool b) { return b ? "true" : "false"; }

void print_flag(std::ostream & out, const FiniteBLAlgebra & a, const char * name, const Flag & f)
{
    out << name << "=" << yes(f.holds);
    if (f.witness)
        out << "  (witness " << a.label(*f.witness) << ")";
    out << "\n";
}

void print_law(std::ostream & out, const FiniteBLAlgebra & a, const char * what, const std::optional<LawFailure> & f)
{
    if (f)
        out << "  " << what << " fails: law " << f->law << " at " << show(a, f->witness) << "\n";
}

void print_verdict(std::ostream & out, const FiniteBLAlgebra & a, const std::string & name, const StateOperator & op)
{
    const auto & v = op.verdict();
    out << "operator " << name << " = " << show(a, op.map()) << ": " << to_string(op.operator_class())
        << (v.preserves_impl ? ", preserves ->" : "") << "\n";
    print_law(out, a, "state", v.state_failure);
    if (v.state)
        print_law(out, a, "strong", v.strong_failure);
    print_law(out, a, "morphism", v.morphism_failure);
    print_law(out, a, "consequence", v.consequence_failure);
}

const NamedOperator & find_operator(const LoadedAlgebra & l, const std::string & name)
{
    for (const auto & op : l.operators)
        if (op.name == name)
            return op;
    std::string known;
    for (const auto & op : l.operators)
        known += " " + op.name;
    throw CLI::ValidationError("--operator", "no operator named '" + name + "'" + (known.empty() ? "" : "; known:" + known));
}

/// Verifies a named operator for the commands that need a state operator.
std::optional<StateOperator> state_operator(std::ostream & out, const LoadedAlgebra & l, const std::string & name)
{
    const auto op = verify_operator(l.algebra, find_operator(l, name).map);
    if (! op.is_state()) {
        print_verdict(out, l.algebra, name, op);
        out << "not a state operator\n";
        return std::nullopt;
    }
    return op;
}

int cmd_construct(const std::vector<std::string> & words, const std::string & output, std::ostream & out)
{
    std::string expression;
    if (words.size() == 1) {
        expression = words.front();
    } else {
        expression = words.front() + "(";
        for (std::size_t k = 1; k < words.size(); ++k)
            expression += (k > 1 ? "," : "") + words[k];
        expression += ")";
    }
    auto l = resolve_operand(expression);
    const auto text = serialize_algebra(from_algebra(l.algebra, l.name, l.operators, l.states));
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (! (file << text))
            throw ParseError(1, 1, "cannot write " + output);
    }
    return ok;
}

int cmd_verify(const std::string & operand, std::ostream & out)
{
    const auto doc = std::filesystem::is_regular_file(operand) ? read_document(operand) : AlgebraDocument{};
    LoadedAlgebra l = [&] {
        if (! std::filesystem::is_regular_file(operand))
            return resolve_operand(operand);
        try {
            return load(doc, std::filesystem::path(operand).stem().string());
        } catch (const ValidationError & e) {
            const auto & v = e.violation();
            out << "axiom failure: " << to_string(v.axiom) << ", law " << v.law << " at (";
            for (std::size_t k = 0; k < v.witness.size(); ++k)
                out << (k ? ", " : "") << doc.labels.at(v.witness[k]);
            out << ")\n";
            throw;
        }
    }();
    const auto & a = l.algebra;
    out << l.name << ": BL-algebra with " << a.size() << " elements\n";
    const auto variety = classify_variety(a);
    auto identity = [&](const char * name, const IdentityCheck & c) {
        out << name << "=" << yes(c.holds);
        if (! c.holds)
            out << "  (witness " << show(a, c.witness) << ")";
        out << "\n";
    };
    identity("linear", variety.is_linear);
    identity("mv", variety.is_mv);
    identity("godel", variety.is_godel);
    identity("mv_or_product", variety.mv_or_product_identity);
    for (const auto & op : l.operators)
        print_verdict(out, a, op.name, verify_operator(a, op.map));
    int code = ok;
    for (const auto & s : l.states) {
        const auto v = check_state(a, s.values);
        out << "state " << s.name << " = " << to_string(s.values) << ": ";
        if (v.bosbach) {
            out << (v.extremal ? "extremal state" : "state") << "\n";
        } else {
            code = check_failed;
            out << "not a state";
            if (! v.in_range && v.range_witness)
                out << ", value out of [0, 1] at " << a.label(*v.range_witness);
            else if (v.bosbach_witness)
                out << ", Bosbach law fails at " << show(a, *v.bosbach_witness);
            out << "\n";
        }
    }
    return code;
}

int cmd_enumerate(const std::string & operand, const std::string & cls, unsigned workers, std::ostream & out)
{
    const auto l = resolve_operand(operand);
    const auto ops = enumerate_operators(l.algebra, search_class_from_string(cls), workers);
    for (const auto & op : ops)
        out << show(l.algebra, op.map()) << "  " << to_string(op.operator_class()) << (op.preserves_impl() ? ", preserves ->" : "") << "\n";
    out << ops.size() << " " << cls << " operator" << (ops.size() == 1 ? "" : "s") << "\n";
    return ok;
}

int cmd_filters(const std::string & operand, std::ostream & out)
{
    const auto l = resolve_operand(operand);
    const auto & a = l.algebra;
    const auto maximal = maximal_filters(a);
    for (const auto & f : all_filters(a)) {
        out << a.set_to_string(f);
        if (std::find(maximal.begin(), maximal.end(), f) != maximal.end())
            out << "  maximal";
        if (! f.contains(a.bottom()) && is_primary(a, f))
            out << "  primary";
        out << "\n";
    }
    out << "radical " << a.set_to_string(radical(a)) << "\n";
    return ok;
}

int cmd_classify(const std::string & operand, const std::string & op_name, std::ostream & out)
{
    const auto l = resolve_operand(operand);
    const auto & a = l.algebra;
    const auto c = classify_algebra(a);
    print_flag(out, a, "simple", c.simple);
    print_flag(out, a, "semisimple", c.semisimple);
    print_flag(out, a, "local", c.local);
    print_flag(out, a, "perfect", c.perfect);
    print_flag(out, a, "locally_finite", c.locally_finite);
    out << "subdirectly_irreducible=" << yes(subdirectly_irreducible(a).irreducible) << "\n";
    out << "radical=" << a.set_to_string(c.radical) << "\n";
    out << "maximal_filters=";
    for (std::size_t k = 0; k < c.maximal_filters.size(); ++k)
        out << (k ? " " : "") << a.set_to_string(c.maximal_filters[k]);
    out << "\n";
    if (op_name.empty())
        return ok;
    const auto op = state_operator(out, l, op_name);
    if (! op)
        return check_failed;
    const auto s = classify_state_algebra(a, *op);
    out << "operator " << op_name << " = " << show(a, op->map()) << ": " << to_string(op->operator_class()) << "\n";
    out << "kernel=" << a.set_to_string(s.ker) << "\n";
    out << "faithful=" << yes(s.ker == ElementSet(a.size(), {a.top()})) << "\n";
    print_flag(out, a, "radical_faithful", s.radical_faithful);
    out << "ker_maximal=" << yes(s.ker_maximal) << "\n";
    out << "image=" << show(a, s.image.embedding) << "\n";
    print_flag(out, a, "ssbl_simple", s.ssbl_simple);
    print_flag(out, a, "sssbl_semisimple", s.sssbl_semisimple);
    out << "rad_sigma=" << a.set_to_string(s.rad_sigma) << "\n";
    out << "maximal_state_filters=";
    for (std::size_t k = 0; k < s.maximal_state_filters.size(); ++k)
        out << (k ? " " : "") << a.set_to_string(s.maximal_state_filters[k]);
    out << "\n";
    const auto irr = subdirectly_irreducible(a, op->map());
    out << "state_subdirectly_irreducible=" << yes(irr.irreducible);
    if (irr.least)
        out << "  (least state filter " << a.set_to_string(*irr.least) << ")";
    out << "\n";
    return ok;
}

int cmd_states(const std::string & operand, const std::string & op_name, std::ostream & out)
{
    const auto l = resolve_operand(operand);
    const auto & a = l.algebra;
    int code = ok;
    for (const auto & s : extremal_states(a))
        out << "extremal " << to_string(s) << "\n";
    for (const auto & s : l.states) {
        const auto v = check_state(a, s.values);
        out << "state " << s.name << ": " << (v.bosbach ? (v.extremal ? "extremal state" : "state") : "not a state") << "\n";
        if (! v.bosbach)
            code = check_failed;
    }
    if (op_name.empty())
        return code;
    const auto op = state_operator(out, l, op_name);
    if (! op)
        return check_failed;
    const auto r = sigma_compatible_correspondence(a, *op);
    for (const auto & s : r.compatible_extremals)
        out << "compatible extremal " << to_string(s) << "\n";
    for (const auto & s : r.image_extremals)
        out << "image extremal " << to_string(s) << "\n";
    out << "correspondence=" << yes(r.holds()) << "\n";
    for (const auto & s : l.states)
        if (check_state(a, s.values).bosbach)
            out << "state " << s.name << " sigma_compatible=" << yes(is_sigma_compatible(op->map(), s.values)) << "\n";
    return r.holds() ? code : check_failed;
}

int cmd_search_nonstrong(const std::string & operand, unsigned workers, std::ostream & out)
{
    const auto l = resolve_operand(operand);
    const auto found = search_nonstrong(l.algebra, workers);
    for (const auto & op : found) {
        out << show(l.algebra, op.map()) << "\n";
        print_law(out, l.algebra, "strong", op.verdict().strong_failure);
    }
    out << found.size() << " non-strong state operator" << (found.size() == 1 ? "" : "s") << "\n";
    return ok;
}

std::vector<std::string> split_claims(const std::vector<std::string> & items)
{
    std::vector<std::string> out;
    for (const auto & item : items) {
        std::stringstream in(item);
        std::string id;
        while (std::getline(in, id, ','))
            if (! id.empty())
                out.push_back(id);
    }
    return out;
}

} // namespace

LoadedAlgebra resolve_operand(std::string_view operand)
{
    const std::filesystem::path path(operand);
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec))
        return load(read_document(path), path.stem().string());
    return ExpressionParser(operand).parse();
}

int run_command(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Finite BL-algebras with state operators"};
    app.name("blstate");
    app.require_subcommand(1, 1);

    std::vector<std::string> construct_words;
    std::string output, operand, op_name, cls = "state", corpus_dir;
    std::vector<std::string> claims;
    unsigned workers = 1;
    bool keep_going = false, json = false, timings = false;

    auto * construct = app.add_subcommand("construct", "Print the canonical document of a constructed algebra");
    construct->add_option("what", construct_words, "mv-chain N | godel-chain N | product F G | ordinal-sum F... | comet B N... | example-3-4")
        ->required();
    construct->add_option("-o,--output", output, "Write to a file instead of stdout");

    auto * verify = app.add_subcommand("verify", "Check the axioms, declared operators and declared states");
    verify->add_option("file", operand)->required();

    auto * enumerate = app.add_subcommand("enumerate-operators", "List every operator of a class");
    enumerate->add_option("file", operand)->required();
    enumerate->add_option("--class", cls, "state | strong | morphism | endomorphism")
        ->check(CLI::IsMember({"state", "strong", "morphism", "endomorphism"}));
    enumerate->add_option("--workers", workers)->check(CLI::Range(1u, 256u));

    auto * filters = app.add_subcommand("filters", "List the filters");
    filters->add_option("file", operand)->required();

    auto * classify = app.add_subcommand("classify", "Classify the algebra and optionally a state operator");
    classify->add_option("file", operand)->required();
    classify->add_option("--operator", op_name);

    auto * states = app.add_subcommand("states", "Extremal states and the σ-compatible correspondence");
    states->add_option("file", operand)->required();
    states->add_option("--operator", op_name);

    auto * nonstrong = app.add_subcommand("search-nonstrong", "Find state operators that are not strong");
    nonstrong->add_option("file", operand)->required();
    nonstrong->add_option("--workers", workers)->check(CLI::Range(1u, 256u));

    auto * suite = app.add_subcommand("paper-suite", "Re-check every claim on a corpus");
    suite->add_option("--claims", claims, "Comma separated claim ids");
    suite->add_option("--corpus", corpus_dir, "Directory of *.json documents");
    suite->add_flag("--keep-going", keep_going, "Report every record instead of stopping at the first failure");
    suite->add_option("--workers", workers)->check(CLI::Range(1u, 256u));
    suite->add_flag("--json", json, "Emit the report as JSON");
    suite->add_flag("--timings", timings, "Include per-record times");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*construct)
            return cmd_construct(construct_words, output, out);
        if (*verify)
            return cmd_verify(operand, out);
        if (*enumerate)
            return cmd_enumerate(operand, cls, workers, out);
        if (*filters)
            return cmd_filters(operand, out);
        if (*classify)
            return cmd_classify(operand, op_name, out);
        if (*states)
            return cmd_states(operand, op_name, out);
        if (*nonstrong)
            return cmd_search_nonstrong(operand, workers, out);
        const auto corpus = corpus_dir.empty() ? default_corpus() : load_corpus(corpus_dir);
        SuiteOptions options{split_claims(claims), workers, keep_going};
        const auto report = run_suite(corpus, options);
        out << (json ? report_json(report, timings) : report_text(report, timings));
        return report.passed() ? ok : check_failed;
    } catch (const ValidationError & e) {
        err << "error: " << e.what() << "\n";
        return check_failed;
    } catch (const ParseError & e) {
        err << "parse error: " << e.what() << "\n";
        return usage_error;
    } catch (const CLI::Error & e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

} // namespace blstate::cli
