#include "qmcstab/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qmcstab/csv.hpp"
#include "qmcstab/errors.hpp"

namespace qmcstab {

namespace {

// Direction integers carry this many bits so the double conversion is exact.
constexpr int kSobolBits = 52;
constexpr double kSobolScale = 1.0 / 9007199254740992.0;  // 2^-53 * 2 = 2^-52

void check_base(int b) {
    if (b < 2) throw std::invalid_argument("radical_inverse: base must be >= 2");
}

bool pairwise_coprime(const std::vector<int>& bases) {
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i + 1; j < bases.size(); ++j)
            if (std::gcd(bases[i], bases[j]) != 1) return false;
    return true;
}

// Per-dimension direction integers V_k = m_k * 2^(kSobolBits - k), k = 1..kSobolBits.
std::vector<std::uint64_t> sobol_directions(const SobolTable::Row& row) {
    std::vector<std::uint64_t> m(kSobolBits + 1, 0);
    const int s = row.s;
    for (int k = 1; k <= std::min<int>(s, kSobolBits); ++k) m[k] = row.m[k - 1];
    for (int k = s + 1; k <= kSobolBits; ++k) {
        std::uint64_t v = m[k - s] ^ (m[k - s] << s);
        for (int i = 1; i < s; ++i)
            if ((row.a >> (s - 1 - i)) & 1u) v ^= m[k - i] << i;
        m[k] = v;
    }
    std::vector<std::uint64_t> dir(kSobolBits + 1, 0);
    for (int k = 1; k <= kSobolBits; ++k) dir[k] = m[k] << (kSobolBits - k);
    return dir;
}

std::vector<std::uint64_t> first_dimension_directions() {
    std::vector<std::uint64_t> dir(kSobolBits + 1, 0);
    for (int k = 1; k <= kSobolBits; ++k) dir[k] = std::uint64_t{1} << (kSobolBits - k);
    return dir;
}

// x_n for dimension dir: XOR of direction integers selected by gray(n).
double sobol_point(std::uint64_t n, const std::vector<std::uint64_t>& dir) {
    std::uint64_t gray = n ^ (n >> 1);
    std::uint64_t x = 0;
    for (int k = 1; gray != 0; ++k, gray >>= 1)
        if (gray & 1u) x ^= dir[k];
    return static_cast<double>(x) * kSobolScale;
}

double uniform_from_bits(std::uint64_t r) { return static_cast<double>(r >> 11) * 0x1p-53; }

}  // namespace

GeneratorSpec GeneratorSpec::van_der_corput(int base, std::uint64_t skip) {
    GeneratorSpec g;
    g.kind = GeneratorKind::VanDerCorput;
    g.dimension = 1;
    g.base = base;
    g.skip = skip;
    return g;
}

GeneratorSpec GeneratorSpec::halton(std::vector<int> bases, std::uint64_t skip) {
    GeneratorSpec g;
    g.kind = GeneratorKind::Halton;
    g.dimension = static_cast<int>(bases.size());
    g.bases = std::move(bases);
    g.skip = skip;
    return g;
}

GeneratorSpec GeneratorSpec::sobol(int dimension, std::uint64_t skip, std::string table_file) {
    GeneratorSpec g;
    g.kind = GeneratorKind::Sobol;
    g.dimension = dimension;
    g.skip = skip;
    g.sobol_table_file = std::move(table_file);
    return g;
}

GeneratorSpec GeneratorSpec::pseudo_random(int dimension, std::uint64_t seed,
                                           std::uint64_t skip) {
    GeneratorSpec g;
    g.kind = GeneratorKind::PseudoRandom;
    g.dimension = dimension;
    g.seed = seed;
    g.skip = skip;
    return g;
}

const SobolTable& SobolTable::embedded() {
    // Joe-Kuo direction numbers (new-joe-kuo-6) for dimensions 2..16;
    // dimension 1 is built in.
    static const SobolTable table = [] {
        SobolTable t;
        t.rows = {
            {2, 1, 0, {1}},
            {3, 2, 1, {1, 3}},
            {4, 3, 1, {1, 3, 1}},
            {5, 3, 2, {1, 1, 1}},
            {6, 4, 1, {1, 1, 3, 3}},
            {7, 4, 4, {1, 3, 5, 13}},
            {8, 5, 2, {1, 1, 5, 5, 17}},
            {9, 5, 4, {1, 1, 5, 5, 5}},
            {10, 5, 7, {1, 1, 7, 11, 19}},
            {11, 5, 11, {1, 1, 5, 1, 1}},
            {12, 5, 13, {1, 1, 1, 3, 11}},
            {13, 5, 14, {1, 3, 5, 5, 31}},
            {14, 6, 1, {1, 3, 3, 9, 7, 49}},
            {15, 6, 13, {1, 1, 1, 15, 21, 21}},
            {16, 6, 16, {1, 3, 1, 13, 27, 49}},
        };
        return t;
    }();
    return table;
}

SobolTable SobolTable::parse(std::istream& in) {
    SobolTable t;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        long long d = 0;
        if (!(row >> d)) continue;  // header or blank line
        Row r;
        r.d = static_cast<int>(d);
        long long s = 0, a = 0;
        if (!(row >> s >> a) || d < 2 || s < 1 || a < 0)
            throw std::invalid_argument("SobolTable: malformed row: " + line);
        r.s = static_cast<int>(s);
        r.a = static_cast<std::uint32_t>(a);
        for (int k = 0; k < r.s; ++k) {
            long long m = 0;
            if (!(row >> m) || m < 1 || m % 2 == 0 || m >= (1LL << (k + 1)))
                throw std::invalid_argument("SobolTable: bad m value in row: " + line);
            r.m.push_back(static_cast<std::uint32_t>(m));
        }
        t.rows.push_back(std::move(r));
    }
    std::sort(t.rows.begin(), t.rows.end(),
              [](const Row& x, const Row& y) { return x.d < y.d; });
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.rows[i].d != static_cast<int>(i) + 2)
            throw std::invalid_argument("SobolTable: rows must cover d = 2,3,... without gaps");
    return t;
}

SobolTable SobolTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("SobolTable: cannot open " + path);
    return parse(in);
}

double radical_inverse(std::uint64_t n, int base) {
    check_base(base);
    const auto b = static_cast<std::uint64_t>(base);
    std::uint64_t reversed = 0;
    std::uint64_t denom = 1;
    while (n > 0) {
        reversed = reversed * b + n % b;
        denom *= b;
        n /= b;
    }
    return static_cast<double>(reversed) / static_cast<double>(denom);
}

PointSet generate(const GeneratorSpec& spec, std::size_t count) {
    if (count < 1) throw std::invalid_argument("generate: count must be >= 1");
    if (spec.dimension < 1) throw std::invalid_argument("generate: dimension must be >= 1");

    PointSet ps;
    ps.dimension = spec.dimension;
    ps.provenance = spec;
    ps.points.reserve(count);

    switch (spec.kind) {
        case GeneratorKind::VanDerCorput: {
            if (spec.dimension != 1)
                throw std::invalid_argument("generate: van der Corput requires dimension 1");
            check_base(spec.base);
            for (std::size_t i = 0; i < count; ++i)
                ps.points.push_back({radical_inverse(spec.skip + i, spec.base)});
            break;
        }
        case GeneratorKind::Halton: {
            if (static_cast<int>(spec.bases.size()) != spec.dimension)
                throw std::invalid_argument("generate: Halton needs one base per dimension");
            for (int b : spec.bases) check_base(b);
            if (!pairwise_coprime(spec.bases))
                throw std::invalid_argument("generate: Halton bases must be pairwise coprime");
            for (std::size_t i = 0; i < count; ++i) {
                std::vector<double> x(spec.dimension);
                for (int j = 0; j < spec.dimension; ++j)
                    x[j] = radical_inverse(spec.skip + i, spec.bases[j]);
                ps.points.push_back(std::move(x));
            }
            break;
        }
        case GeneratorKind::Sobol: {
            const SobolTable owned =
                spec.sobol_table_file.empty() ? SobolTable{} : SobolTable::load(spec.sobol_table_file);
            const SobolTable& table = spec.sobol_table_file.empty() ? SobolTable::embedded() : owned;
            if (spec.dimension > table.max_dimension())
                throw std::invalid_argument(
                    "generate: Sobol direction-number table covers only " +
                    std::to_string(table.max_dimension()) + " dimensions");
            std::vector<std::vector<std::uint64_t>> dirs;
            dirs.push_back(first_dimension_directions());
            for (int d = 2; d <= spec.dimension; ++d)
                dirs.push_back(sobol_directions(table.rows[d - 2]));
            for (std::size_t i = 0; i < count; ++i) {
                std::vector<double> x(spec.dimension);
                for (int j = 0; j < spec.dimension; ++j)
                    x[j] = sobol_point(spec.skip + i, dirs[j]);
                ps.points.push_back(std::move(x));
            }
            break;
        }
        case GeneratorKind::PseudoRandom: {
            std::mt19937_64 rng(spec.seed);
            rng.discard(spec.skip * static_cast<std::uint64_t>(spec.dimension));
            for (std::size_t i = 0; i < count; ++i) {
                std::vector<double> x(spec.dimension);
                for (int j = 0; j < spec.dimension; ++j) x[j] = uniform_from_bits(rng());
                ps.points.push_back(std::move(x));
            }
            break;
        }
    }
    return ps;
}

DiscrepancyResult star_discrepancy_1d(const PointSet& ps) {
    if (ps.dimension != 1)
        throw std::invalid_argument("star_discrepancy_1d: point set must be 1-dimensional");
    const std::size_t n = ps.size();
    if (n == 0) throw std::invalid_argument("star_discrepancy_1d: empty point set");

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = ps.points[i][0];
    std::sort(x.begin(), x.end());

    // D*_N = 1/(2N) + max_i |x_(i) - (2i-1)/(2N)|
    const double half = 1.0 / (2.0 * static_cast<double>(n));
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double target = static_cast<double>(2 * i + 1) * half;
        worst = std::max(worst, std::abs(x[i] - target));
    }
    return {n, half + worst, DiscrepancyMethod::ClosedForm1D};
}

DiscrepancyResult star_discrepancy_nd_bruteforce(const PointSet& ps, std::size_t oracle_limit) {
    const std::size_t n = ps.size();
    if (n == 0) throw std::invalid_argument("star_discrepancy_nd_bruteforce: empty point set");
    if (n > oracle_limit)
        throw std::invalid_argument("star_discrepancy_nd_bruteforce: N exceeds oracle limit");
    const int s = ps.dimension;

    // Candidate corner values per axis: the point coordinates, plus 1 for the
    // open-box direction. The supremum of the definition is attained there.
    std::vector<std::vector<double>> axis(s);
    for (int j = 0; j < s; ++j) {
        for (const auto& p : ps.points) axis[j].push_back(p[j]);
        axis[j].push_back(1.0);
        std::sort(axis[j].begin(), axis[j].end());
        axis[j].erase(std::unique(axis[j].begin(), axis[j].end()), axis[j].end());
    }

    std::vector<std::size_t> idx(s, 0);
    std::vector<double> corner(s);
    double worst = 0.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    while (true) {
        double volume = 1.0;
        for (int j = 0; j < s; ++j) {
            corner[j] = axis[j][idx[j]];
            volume *= corner[j];
        }
        std::size_t strictly_inside = 0;  // box [0, corner) approached from below
        std::size_t inside_closed = 0;    // box [0, corner] (limit from above)
        for (const auto& p : ps.points) {
            bool strict = true, closed = true;
            for (int j = 0; j < s; ++j) {
                if (p[j] >= corner[j]) strict = false;
                if (p[j] > corner[j]) {
                    closed = false;
                    break;
                }
            }
            strictly_inside += strict;
            inside_closed += closed;
        }
        worst = std::max(worst, volume - static_cast<double>(strictly_inside) * inv_n);
        worst = std::max(worst, static_cast<double>(inside_closed) * inv_n - volume);

        int j = 0;
        while (j < s && ++idx[j] == axis[j].size()) idx[j++] = 0;
        if (j == s) break;
    }
    return {n, worst, DiscrepancyMethod::BruteForceND};
}

double empirical_c(const GeneratorSpec& spec, const std::vector<std::size_t>& n_grid,
                   std::size_t oracle_limit) {
    if (n_grid.empty()) throw std::invalid_argument("empirical_c: empty grid");
    for (std::size_t n : n_grid)
        if (n <= 2) throw std::invalid_argument("empirical_c: grid entries must be >= 3");

    double c = 0.0;
    for (std::size_t n : n_grid) {
        PointSet ps = generate(spec, n);
        const double d = spec.dimension == 1 ? star_discrepancy_1d(ps).d_star
                                             : star_discrepancy_nd_bruteforce(ps, oracle_limit).d_star;
        const double rate = std::pow(std::log(static_cast<double>(n)),
                                     static_cast<double>(spec.dimension)) /
                            static_cast<double>(n);
        c = std::max(c, d / rate);
    }
    return c;
}

void write_point_csv(const PointSet& ps, std::ostream& out) {
    out << "index";
    for (int j = 1; j <= ps.dimension; ++j) out << ",x" << j;
    out << "\n";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out << ps.provenance.skip + i;
        for (int j = 0; j < ps.dimension; ++j) out << ',' << format_double(ps.points[i][j]);
        out << "\n";
    }
}

}  // namespace qmcstab
