#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qmcstab {

enum class GeneratorKind { VanDerCorput, Halton, Sobol, PseudoRandom };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::VanDerCorput;
    int dimension = 1;
    std::uint64_t skip = 0;  // leading indices to discard

    int base = 2;                  // VanDerCorput
    std::vector<int> bases;        // Halton, one per dimension, pairwise coprime
    std::string sobol_table_file;  // Sobol; empty selects the embedded table
    std::uint64_t seed = 0;        // PseudoRandom

    static GeneratorSpec van_der_corput(int base, std::uint64_t skip = 0);
    static GeneratorSpec halton(std::vector<int> bases, std::uint64_t skip = 0);
    static GeneratorSpec sobol(int dimension, std::uint64_t skip = 0,
                               std::string table_file = {});
    static GeneratorSpec pseudo_random(int dimension, std::uint64_t seed,
                                       std::uint64_t skip = 0);
};

// Ordered point set in [0,1)^s. points[i] is the point of index skip + i.
struct PointSet {
    int dimension = 1;
    std::vector<std::vector<double>> points;
    GeneratorSpec provenance;

    std::size_t size() const { return points.size(); }
};

enum class DiscrepancyMethod { ClosedForm1D, BruteForceND };

struct DiscrepancyResult {
    std::size_t n = 0;
    double d_star = 0.0;
    DiscrepancyMethod method = DiscrepancyMethod::ClosedForm1D;
};

// Sobol direction numbers, one row per dimension beyond the first:
// d, s, a, m_1 .. m_s (the Joe-Kuo file layout).
struct SobolTable {
    struct Row {
        int d = 0;
        int s = 0;
        std::uint32_t a = 0;
        std::vector<std::uint32_t> m;
    };
    std::vector<Row> rows;

    int max_dimension() const { return rows.empty() ? 1 : rows.back().d; }

    static const SobolTable& embedded();  // covers dimensions <= 16
    static SobolTable parse(std::istream& in);
    static SobolTable load(const std::string& path);
};

// Base-b digit reversal of n into [0,1).
double radical_inverse(std::uint64_t n, int base);

PointSet generate(const GeneratorSpec& spec, std::size_t count);

// Exact 1D star-discrepancy via the closed form over sorted points.
DiscrepancyResult star_discrepancy_1d(const PointSet& ps);

// Exact star-discrepancy from the definition, enumerating anchored boxes with
// corners at point coordinates. O(N^s (N + s)); refuses above oracle_limit.
DiscrepancyResult star_discrepancy_nd_bruteforce(const PointSet& ps,
                                                 std::size_t oracle_limit = 256);

// max over the grid of N * D*_N / (log N)^s.
double empirical_c(const GeneratorSpec& spec, const std::vector<std::size_t>& n_grid,
                   std::size_t oracle_limit = 256);

// CSV with header index,x1,...,xs.
void write_point_csv(const PointSet& ps, std::ostream& out);

}  // namespace qmcstab
