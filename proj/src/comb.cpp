#include "hurwitz/comb.hpp"

#include "hurwitz/error.hpp"

namespace seqalg {

mpz_class factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<std::vector<mpz_class>> stirling2_table(std::size_t n_max)
{
    std::vector<std::vector<mpz_class>> t(n_max + 1);
    t[0] = {1};
    for (std::size_t n = 1; n <= n_max; ++n) {
        t[n].assign(n + 1, 0);
        for (std::size_t k = 1; k <= n; ++k) {
            const mpz_class above = k < n ? t[n - 1][k] : mpz_class(0);
            t[n][k] = mpz_class(static_cast<unsigned long>(k)) * above + t[n - 1][k - 1];
        }
    }
    return t;
}

std::vector<std::vector<mpz_class>> stirling1_unsigned_table(std::size_t n_max)
{
    std::vector<std::vector<mpz_class>> t(n_max + 1);
    t[0] = {1};
    for (std::size_t n = 1; n <= n_max; ++n) {
        t[n].assign(n + 1, 0);
        for (std::size_t k = 1; k <= n; ++k) {
            const mpz_class above = k < n ? t[n - 1][k] : mpz_class(0);
            t[n][k] = mpz_class(static_cast<unsigned long>(n - 1)) * above + t[n - 1][k - 1];
        }
    }
    return t;
}

mpz_class stirling2(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    return stirling2_table(n)[n][k];
}

mpz_class stirling1_unsigned(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    return stirling1_unsigned_table(n)[n][k];
}

// ---------------------------------------------------------------------------

BellArguments::BellArguments(Ring ring, std::vector<Value> values)
    : ring_(std::move(ring)), values_(std::move(values))
{
    for (const auto& v : values_) {
        if (!(v.ring() == ring_))
            throw Error(ErrorKind::RingMismatch, "Bell argument in " + v.ring().to_string() +
                                                     ", expected " + ring_.to_string());
    }
}

Value BellArguments::operator[](std::size_t j) const
{
    if (j == 0 || j > values_.size())
        return ring_.zero();
    return values_[j - 1];
}

BellTable::BellTable(Kind kind, Ring ring) : kind_(kind), ring_(std::move(ring)), zero_(ring_.zero())
{
    rows_.push_back({ring_.one()});
}

const Value& BellTable::operator()(std::size_t n, std::size_t k) const
{
    if (n >= rows_.size())
        throw Error(ErrorKind::IndexOutOfRange, "Bell row " + std::to_string(n) + " not computed");
    return k <= n ? rows_[n][k] : zero_;
}

void BellTable::extend(const BellArguments& args)
{
    if (!(args.ring() == ring_))
        throw Error(ErrorKind::RingMismatch, "Bell arguments in " + args.ring().to_string() +
                                                 " for a table over " + ring_.to_string());
    const std::size_t n = rows_.size();
    std::vector<Value> row(n + 1, zero_);
    for (std::size_t j = 1; j <= n; ++j) {
        const Value x = args[j];
        if (x.is_zero())
            continue;
        const Value weighted = kind_ == Kind::Exponential ? scale(x, binomial(n - 1, j - 1)) : x;
        // B_{n,k} += w * x_j * B_{n-j,k-1} for 1 <= k <= n-j+1
        const auto& prev = rows_[n - j];
        for (std::size_t k = 1; k <= n - j + 1; ++k) {
            if (!prev[k - 1].is_zero())
                row[k] += weighted * prev[k - 1];
        }
    }
    rows_.push_back(std::move(row));
}

void BellTable::set_linear_entry(const Value& x_n)
{
    if (rows_.size() < 2)
        throw Error(ErrorKind::IndexOutOfRange, "Bell table has no row with a linear entry");
    rows_.back()[1] = x_n;
}

BellTable ordinary_bell_table(const BellArguments& args, std::size_t n_max)
{
    BellTable t(BellTable::Kind::Ordinary, args.ring());
    while (t.rows() <= n_max)
        t.extend(args);
    return t;
}

BellTable exponential_bell_table(const BellArguments& args, std::size_t n_max)
{
    BellTable t(BellTable::Kind::Exponential, args.ring());
    while (t.rows() <= n_max)
        t.extend(args);
    return t;
}

Value ordinary_bell_partial(const BellArguments& args, std::size_t n, std::size_t k)
{
    if (k > n)
        return args.ring().zero();
    return ordinary_bell_table(args, n)(n, k);
}

Value ordinary_bell_complete(const BellArguments& args, std::size_t n)
{
    if (n == 0)
        return args.ring().one();
    const BellTable t = ordinary_bell_table(args, n);
    Value sum = args.ring().zero();
    for (std::size_t k = 1; k <= n; ++k)
        sum += t(n, k);
    return sum;
}

Value exponential_bell_partial(const BellArguments& args, std::size_t n, std::size_t k)
{
    if (k > n)
        return args.ring().zero();
    return exponential_bell_table(args, n)(n, k);
}

}  // namespace seqalg
