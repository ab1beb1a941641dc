#include "crl_atlas/loci.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace crl_atlas {

namespace {

Integer product_of_factorial_counts(const Partition& p, int skip_value) {
    std::map<int, int> counts;
    for (int v : p.parts()) ++counts[v];
    Integer out = 1;
    for (const auto& [v, c] : counts)
        if (v != skip_value) out *= factorial(c);
    return out;
}

void sort_terms(std::vector<DualTerm>& terms) {
    std::sort(terms.begin(), terms.end(), [](const DualTerm& a, const DualTerm& b) { return a.mu > b.mu; });
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string DualComponentSum::str() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " ∪ ";
        if (terms[i].mult != 1) out += std::to_string(terms[i].mult) + "·";
        out += "(Δ_{(" + terms[i].mu.str() + ")})^∨";
    }
    return out;
}

void IncidenceContext::validate() const {
    if (!(0 <= j && j <= l && l <= r && j <= n))
        throw std::invalid_argument("incidence indices need 0 <= j <= l <= r and j <= n");
}

Integer crl_degree(const Partition& lambda) {
    Integer out = factorial(lambda.length());
    out /= product_of_factorial_counts(lambda, 0);
    for (int p : lambda.parts()) out *= p;
    return out;
}

Integer dual_degree(const Partition& lambda) {
    if (lambda.count_of(1) > 0) throw std::domain_error("dual not a hypersurface (a part equals 1)");
    Integer out = factorial(lambda.length() + 1);
    out /= product_of_factorial_counts(lambda, 1);
    for (int p : lambda.parts()) out *= p - 1;
    return out;
}

int dual_codim(const Partition& lambda) { return lambda.count_of(1) + 1; }

int grassmannian_dim(int l, int r) { return (l + 1) * (r - l); }

int incidence_dim(const IncidenceContext& ctx) {
    ctx.validate();
    const auto [r, n, j, l] = ctx;
    return -j * j + (n - r + l) * j + r * l - l * l + n;
}

int incidence_gap(const IncidenceContext& ctx) {
    ctx.validate();
    const auto [r, n, j, l] = ctx;
    return 1 + (j + 1) * (r - n - 1 + j - l);
}

int chow_codim(const IncidenceContext& ctx) {
    ctx.validate();
    if (ctx.j != 0 || ctx.l >= ctx.r - ctx.n)
        throw std::invalid_argument("the exact Chow codimension needs j = 0 and l < r - n");
    return ctx.r - ctx.n - ctx.l;
}

bool is_ch_hypersurface(const Partition& lambda, int j) {
    return j >= 0 && j <= lambda.length() - lambda.count_of(1);
}

DualComponentSum pullback_decomposition(const Partition& lambda, int j, bool with_multiplicities) {
    if (!is_ch_hypersurface(lambda, j)) throw std::domain_error("CH_j not a hypersurface");
    DualComponentSum out;
    out.r = lambda.sum();
    out.j = j;
    out.d = out.r + lambda.length() - j;
    out.with_multiplicities = with_multiplicities;
    for (const auto& child : children(lambda, j)) {
        out.terms.push_back({with_multiplicities ? multiplicity(child, lambda) : 1, child.incremented()});
    }
    sort_terms(out.terms);
    return out;
}

Integer polar_degree_from_sum(int n, int j, const Integer& weighted_sum) {
    const Integer numerator = weighted_sum * (n + 1);
    const Integer denominator = n - j + 1;
    if (denominator <= 0) throw std::out_of_range("polar degree needs j <= n");
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
        throw ConjectureInconsistency("conjecture inconsistency: " + numerator.get_str() + " is not divisible by " +
                                      denominator.get_str());
    return numerator / denominator;
}

Integer polar_degree(const Partition& lambda, int j) {
    const int n = lambda.length();
    if (j < 0 || j > n) throw std::out_of_range("j must lie in [0, |lambda|]");
    if (!is_ch_hypersurface(lambda, j)) return 0;
    Integer sum = 0;
    for (const auto& child : children(lambda, j)) sum += crl_degree(child) * multiplicity(child, lambda);
    return polar_degree_from_sum(n, j, sum);
}

std::vector<Table1Entry> regenerate_table1(int max_r) {
    std::vector<Table1Entry> out;
    for (int r = 3; r <= max_r; ++r) {
        for (const auto& lambda : enumerate_partitions(r)) {
            if (lambda.largest() == 1) continue;  // Delta_(1^r) is all of P^r
            const int top = lambda.length() - lambda.count_of(1);
            for (int j = 0; j <= top; ++j) out.push_back({lambda, j, pullback_decomposition(lambda, j)});
        }
    }
    return out;
}

std::string format_table1_line(const Table1Entry& e) {
    std::string out = e.lambda.str() + ";" + std::to_string(e.j) + ";" + std::to_string(e.decomposition.d) + ";" +
                      std::to_string(e.decomposition.r) + ";";
    for (std::size_t i = 0; i < e.decomposition.terms.size(); ++i) {
        if (i) out += " + ";
        out += std::to_string(e.decomposition.terms[i].mult) + "*" + e.decomposition.terms[i].mu.str();
    }
    return out;
}

Table1Entry parse_table1_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ';')) fields.push_back(trim(f));
    if (fields.size() != 5) throw std::invalid_argument("table line needs 5 ';'-separated fields: " + line);
    Table1Entry e{Partition::parse(fields[0]), std::stoi(fields[1]), {}};
    e.decomposition.j = e.j;
    e.decomposition.d = std::stoi(fields[2]);
    e.decomposition.r = std::stoi(fields[3]);
    std::string rest = fields[4];
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        std::size_t plus = rest.find('+', pos);
        std::string term = trim(rest.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
        const auto star = term.find('*');
        if (star == std::string::npos) throw std::invalid_argument("table term needs 'm*mu': " + term);
        e.decomposition.terms.push_back({std::stoll(term.substr(0, star)), Partition::parse(term.substr(star + 1))});
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    sort_terms(e.decomposition.terms);
    return e;
}

std::vector<Table1Entry> parse_table1(const std::string& text) {
    std::vector<Table1Entry> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_table1_line(line));
    }
    return out;
}

}  // namespace crl_atlas
