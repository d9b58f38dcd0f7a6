#include "kummer/curve.hpp"

#include "kummer/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kummer {

TorusCurve::TorusCurve(std::vector<QRatFunc> coords) : coords_(std::move(coords)) {
    if (coords_.empty())
        throw domain_error("a torus curve needs at least one coordinate");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i].is_zero())
            throw domain_error("coordinate " + std::to_string(i + 1) + " is identically zero");
}

ValuationMatrix valuation_matrix(const TorusCurve& x) {
    // The basis consists of squarefree pairwise-coprime polynomials over Q
    // rather than irreducible factors. Every root of a basis element carries
    // the same order in every coordinate, so splitting a column into its
    // conjugate places would only duplicate identical columns, and duplicated
    // columns change no kernel condition mod n. Factorisation into
    // irreducibles is therefore never needed.
    const std::size_t k = x.dimension();
    std::vector<QPoly> inputs;
    inputs.reserve(2 * k);
    for (const auto& f : x.coords()) {
        inputs.push_back(f.num().monic());
        inputs.push_back(f.den());
    }
    GcdFreeBasis gb = gcdfree_basis(inputs);

    ValuationMatrix out;
    out.basis = std::move(gb.basis);
    out.exponents = IntMatrix(k, out.basis.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < out.basis.size(); ++j)
            out.exponents.at(i, j) =
                Integer(gb.exponents[2 * i][j]) - Integer(gb.exponents[2 * i + 1][j]);
    return out;
}

KummerReport analyze(const TorusCurve& x) {
    const ValuationMatrix vm = valuation_matrix(x);
    const SmithNormalForm snf = smith_normal_form(vm.exponents);

    KummerReport r;
    r.k = x.dimension();
    r.divisors = snf.divisors;
    r.free = std::all_of(r.divisors.begin(), r.divisors.end(),
                         [](const Integer& d) { return d != 0; });
    if (r.free) {
        Integer idx = 1;
        for (const auto& d : r.divisors)
            idx *= d;
        r.index = idx;
        const Integer dk = r.divisors.back();
        r.exponent = dk;
        r.stabilizing_level = dk;
        r.obstruction_primes = prime_divisors(dk);
        r.kummer_generic = (dk == 1);
    }
    return r;
}

bool is_free_rank(const TorusCurve& x) {
    return rank(valuation_matrix(x).exponents) == x.dimension();
}

namespace {

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty())
        return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        const Rational inv = Rational(1) / rows[r][col];
        for (auto& v : rows[r])
            v *= inv;
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            const Rational f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

bool is_free_alternant(const TorusCurve& x) {
    const std::size_t k = x.dimension();
    std::vector<QRatFunc> lds;
    lds.reserve(k);
    for (const auto& f : x.coords())
        lds.push_back(log_derivative(f));

    // Common denominator, then rank of the numerator coefficient matrix.
    // Rank over Q equals rank over any extension, so this decides dependence
    // over the constants of the algebraic closure as well.
    QPoly common = QPoly::one();
    for (const auto& ld : lds)
        if (!ld.is_zero())
            common = QPoly::lcm(common, ld.den());
    int width = 0;
    std::vector<QPoly> nums;
    nums.reserve(k);
    for (const auto& ld : lds) {
        QPoly n = ld.is_zero() ? QPoly() : ld.num() * common.div_exact(ld.den());
        width = std::max(width, n.degree() + 1);
        nums.push_back(std::move(n));
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(k);
    for (const auto& n : nums) {
        std::vector<Rational> row(static_cast<std::size_t>(std::max(width, 1)), Rational(0));
        for (int i = 0; i <= n.degree(); ++i)
            row[static_cast<std::size_t>(i)] = n.coeff(static_cast<std::size_t>(i));
        rows.push_back(std::move(row));
    }
    return rational_rank(std::move(rows)) == k;
}

bool is_n_kummer_generic(const KummerReport& r, const Integer& n) {
    if (n < 1)
        throw domain_error("Kummer level must be >= 1");
    for (const auto& d : r.divisors)
        if (gcd(d, n) != 1)
            return false;
    return true;
}

bool is_kummer_generic(const KummerReport& r) { return r.free && *r.exponent == 1; }

Integer component_count(const KummerReport& r, const Integer& n) {
    if (n < 1)
        throw domain_error("pullback level must be >= 1");
    Integer count = 1;
    for (const auto& d : r.divisors)
        count *= gcd(d, n); // gcd(0, n) = n
    return count;
}

Integer stabilizing_level(const KummerReport& r) {
    if (!r.free)
        throw domain_error("no stabilizing level exists: index infinite");
    return *r.exponent;
}

bool verify_stabilizing(const KummerReport& r, const Integer& m, unsigned n_max) {
    if (!r.free)
        throw domain_error("no stabilizing level exists: index infinite");
    if (m < 1 || n_max < 1)
        throw domain_error("verify_stabilizing needs m >= 1 and N >= 1");
    const Integer base = component_count(r, m);
    for (unsigned n = 1; n <= n_max; ++n)
        if (component_count(r, m * n) != base)
            return false;
    return true;
}

bool oracle_is_nth_power(const QRatFunc& f, const Integer& n) {
    if (f.is_zero())
        throw domain_error("n-th power test on the zero function");
    if (n < 1)
        throw domain_error("n-th power test needs n >= 1");
    if (n == 1)
        return true;
    for (const auto& part : squarefree_decompose(f.num()).factors)
        if (Integer(part.multiplicity) % n != 0)
            return false;
    for (const auto& part : squarefree_decompose(f.den()).factors)
        if (Integer(part.multiplicity) % n != 0)
            return false;
    return true;
}

namespace {

// Place-by-place order table used only by the brute-force oracle. Built from
// per-coordinate squarefree decompositions refined by repeated gcd
// splitting; shares no code with gcdfree_basis/valuation_matrix and never
// touches the lattice module.
struct OraclePlaces {
    std::vector<QPoly> places;
    std::vector<std::vector<long long>> order; // [coordinate][place]
};

OraclePlaces oracle_places(const TorusCurve& x) {
    struct Part {
        QPoly poly;
        long long mult; // negative for denominator parts
        std::size_t coord;
    };
    std::vector<Part> parts;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        for (const auto& p : squarefree_decompose(x.coord(i).num()).factors)
            parts.push_back({p.factor, static_cast<long long>(p.multiplicity), i});
        for (const auto& p : squarefree_decompose(x.coord(i).den()).factors)
            parts.push_back({p.factor, -static_cast<long long>(p.multiplicity), i});
    }

    OraclePlaces out;
    std::vector<QPoly> work;
    for (const auto& part : parts)
        work.push_back(part.poly);
    // Split everything against everything until pairwise coprime. Splinters
    // are appended and picked up by the outer loop later.
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < i && !work[i].is_constant(); ++j) {
            if (work[j].is_constant())
                continue;
            QPoly g = QPoly::gcd(work[i], work[j]);
            if (g.is_constant())
                continue;
            if (QPoly::compare(g, work[j]) != 0) {
                work.push_back(work[j].div_exact(g));
                work[j] = g;
            }
            work[i] = work[i].div_exact(g);
        }
    }
    for (auto& w : work)
        if (!w.is_constant())
            out.places.push_back(w);
    std::sort(out.places.begin(), out.places.end(),
              [](const QPoly& a, const QPoly& b) { return QPoly::compare(a, b) < 0; });
    out.places.erase(std::unique(out.places.begin(), out.places.end()),
                     out.places.end());

    out.order.assign(x.dimension(), std::vector<long long>(out.places.size(), 0));
    for (const auto& part : parts) {
        for (std::size_t q = 0; q < out.places.size(); ++q) {
            auto [quo, rem] = QPoly::divmod(part.poly, out.places[q]);
            (void)quo;
            if (rem.is_zero())
                out.order[part.coord][q] += part.mult;
        }
    }
    return out;
}

QRatFunc expand_monomial(const TorusCurve& x, const std::vector<std::uint64_t>& a) {
    QRatFunc h(QPoly::one());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            h = h * x.coord(i).pow(static_cast<long long>(a[i]));
    return h;
}

} // namespace

Integer oracle_component_count(const TorusCurve& x, const Integer& n,
                               const OracleOptions& opts) {
    if (n < 1)
        throw domain_error("pullback level must be >= 1");
    const std::size_t k = x.dimension();
    const Integer total = boost::multiprecision::pow(n, static_cast<unsigned>(k));
    if (total > opts.cap)
        throw resource_error("oracle enumeration of size " + total.str() +
                             " exceeds the cap of " + opts.cap.str());
    if (n == 1)
        return 1;

    const OraclePlaces pl = oracle_places(x);
    const std::uint64_t un = n.convert_to<std::uint64_t>();

    long long coord_size = 0;
    for (const auto& f : x.coords())
        coord_size = std::max<long long>(coord_size, f.num().degree() + f.den().degree());

    Integer count = 0;
    unsigned rechecks = 0;
    std::vector<std::uint64_t> a(k, 0);
    while (true) {
        bool member = true;
        for (std::size_t q = 0; member && q < pl.places.size(); ++q) {
            long long s = 0;
            for (std::size_t i = 0; i < k; ++i)
                s += static_cast<long long>(a[i]) * pl.order[i][q];
            if (s % static_cast<long long>(un) != 0)
                member = false;
        }
        if (member) {
            count += 1;
            bool nonzero = std::any_of(a.begin(), a.end(),
                                       [](std::uint64_t v) { return v != 0; });
            if (nonzero && rechecks < opts.recheck_budget) {
                long long est = 0;
                for (std::size_t i = 0; i < k; ++i)
                    est += static_cast<long long>(a[i]) * coord_size;
                if (est <= opts.recheck_degree_limit) {
                    ++rechecks;
                    if (!oracle_is_nth_power(expand_monomial(x, a), n))
                        throw std::logic_error(
                            "oracle self-check failed: place table disagrees with the "
                            "literal n-th power test");
                }
            }
        }
        std::size_t pos = 0;
        while (pos < k) {
            a[pos] += 1;
            if (a[pos] < un)
                break;
            a[pos] = 0;
            ++pos;
        }
        if (pos == k)
            break;
    }
    return count;
}

std::string signature(const KummerReport& r) {
    std::ostringstream out;
    out << (r.free ? "free" : "non-free") << " (";
    for (std::size_t i = 0; i < r.divisors.size(); ++i) {
        if (i)
            out << ",";
        out << r.divisors[i].str();
    }
    out << ")";
    return out.str();
}

} // namespace kummer
