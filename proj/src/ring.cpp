#include "lcdring/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lcdring {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::RingMismatch: return "ring_mismatch";
    case ErrorCode::ShapeMismatch: return "shape_mismatch";
    case ErrorCode::NotUnit: return "not_unit";
    case ErrorCode::NotLocal: return "not_local";
    case ErrorCode::NotPrime: return "not_prime";
    case ErrorCode::ReducibleModulus: return "reducible_modulus";
    case ErrorCode::NonCoprime: return "non_coprime";
    case ErrorCode::NotDivisor: return "not_divisor";
    case ErrorCode::RepeatedRoot: return "repeated_root";
    case ErrorCode::NotFree: return "not_free";
    case ErrorCode::NotLcd: return "not_lcd";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace detail {

struct RingData {
    RingKind kind = RingKind::Chain;
    // Chain
    std::uint64_t p = 0;
    int s = 0;
    int m = 0;
    std::uint64_t ps = 0;
    std::vector<Elem> modulus;
    // LocalAlgebra
    int gens = 0;
    // Composite
    std::vector<Ring> comps;
    std::vector<std::uint64_t> radix;
    bool integer_like = false;

    std::uint64_t card = 0;
    std::uint64_t charac = 0;
    Ring residue;  // unset for fields (residue is the ring itself) and composites

    std::vector<Elem> add_tab;
    std::vector<Elem> mul_tab;
};

} // namespace detail

namespace {

using detail::RingData;

constexpr std::uint64_t kTableLimit = 256;

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Chain coordinates.
std::vector<std::uint64_t> chain_coords(const RingData& d, Elem a) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d.m));
    for (int i = 0; i < d.m; ++i) {
        c[static_cast<std::size_t>(i)] = a % d.ps;
        a /= d.ps;
    }
    return c;
}

Elem chain_pack(const RingData& d, std::span<const std::uint64_t> c) {
    Elem a = 0;
    for (int i = d.m - 1; i >= 0; --i) a = a * d.ps + c[static_cast<std::size_t>(i)] % d.ps;
    return a;
}

Elem chain_add(const RingData& d, Elem a, Elem b) {
    if (d.m == 1) return (a + b) % d.ps;
    Elem r = 0, scale = 1;
    for (int i = 0; i < d.m; ++i) {
        r += ((a % d.ps + b % d.ps) % d.ps) * scale;
        a /= d.ps;
        b /= d.ps;
        scale *= d.ps;
    }
    return r;
}

Elem chain_neg(const RingData& d, Elem a) {
    if (d.m == 1) return (d.ps - a % d.ps) % d.ps;
    Elem r = 0, scale = 1;
    for (int i = 0; i < d.m; ++i) {
        r += ((d.ps - a % d.ps) % d.ps) * scale;
        a /= d.ps;
        scale *= d.ps;
    }
    return r;
}

Elem chain_mul(const RingData& d, Elem a, Elem b) {
    if (d.m == 1) return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % d.ps);
    const auto x = chain_coords(d, a);
    const auto y = chain_coords(d, b);
    const std::size_t m = static_cast<std::size_t>(d.m);
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + x[i] * y[j]) % d.ps;
    // Reduce by the monic modulus from the top degree down.
    for (std::size_t k = 2 * m - 2; k >= m; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (std::size_t t = 0; t <= m; ++t)
            prod[k - m + t] = (prod[k - m + t] + (d.ps - c) * d.modulus[t]) % d.ps;
    }
    return chain_pack(d, std::span(prod.data(), m));
}

Elem algebra_mul(const RingData& d, Elem a, Elem b) {
    const Elem dim = Elem{1} << d.gens;
    Elem r = 0;
    for (Elem x = 0; x < dim; ++x) {
        if (!((a >> x) & 1U)) continue;
        for (Elem y = 0; y < dim; ++y) {
            if (((b >> y) & 1U) && (x & y) == 0) r ^= Elem{1} << (x | y);
        }
    }
    return r;
}

std::vector<Elem> comp_split(const RingData& d, Elem a) {
    std::vector<Elem> parts(d.comps.size());
    for (std::size_t j = 0; j < d.comps.size(); ++j) {
        parts[j] = a % d.comps[j].cardinality();
        a /= d.comps[j].cardinality();
    }
    return parts;
}

Elem comp_pack(const RingData& d, std::span<const Elem> parts) {
    Elem a = 0;
    for (std::size_t j = 0; j < d.comps.size(); ++j) a += parts[j] * d.radix[j];
    return a;
}

Elem raw_add(const RingData& d, Elem a, Elem b) {
    switch (d.kind) {
    case RingKind::Chain: return chain_add(d, a, b);
    case RingKind::LocalAlgebra: return a ^ b;
    case RingKind::Composite: {
        auto x = comp_split(d, a);
        const auto y = comp_split(d, b);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = d.comps[j].add(x[j], y[j]);
        return comp_pack(d, x);
    }
    }
    return 0;
}

Elem raw_mul(const RingData& d, Elem a, Elem b) {
    switch (d.kind) {
    case RingKind::Chain: return chain_mul(d, a, b);
    case RingKind::LocalAlgebra: return algebra_mul(d, a, b);
    case RingKind::Composite: {
        auto x = comp_split(d, a);
        const auto y = comp_split(d, b);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = d.comps[j].mul(x[j], y[j]);
        return comp_pack(d, x);
    }
    }
    return 0;
}

void build_tables(RingData& d) {
    if (d.card > kTableLimit) return;
    const std::size_t n = static_cast<std::size_t>(d.card);
    d.add_tab.resize(n * n);
    d.mul_tab.resize(n * n);
    for (Elem a = 0; a < d.card; ++a)
        for (Elem b = 0; b < d.card; ++b) {
            d.add_tab[a * n + b] = raw_add(d, a, b);
            d.mul_tab[a * n + b] = raw_mul(d, a, b);
        }
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(mod), nr = static_cast<std::int64_t>(a % mod);
    while (nr != 0) {
        const std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) fail(ErrorCode::NotUnit, "element is not invertible");
    if (t < 0) t += static_cast<std::int64_t>(mod);
    return static_cast<std::uint64_t>(t);
}

std::string integer_poly_text(const std::vector<Elem>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1) os << c[i] << '*';
        os << 'X';
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

} // namespace

// ---------------------------------------------------------------------------
// Construction

Ring Ring::chain(std::uint64_t p, int s, int m, std::vector<Elem> modulus) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, "characteristic base " + std::to_string(p) + " is not prime");
    if (s < 1 || m < 1) fail(ErrorCode::Unsupported, "chain ring needs s >= 1 and m >= 1");
    auto d = std::make_shared<RingData>();
    d->kind = RingKind::Chain;
    d->p = p;
    d->s = s;
    d->m = m;
    d->ps = ipow(p, s);
    if (d->ps > (std::uint64_t{1} << 31)) fail(ErrorCode::Unsupported, "p^s too large");
    long double card = 1;
    for (int i = 0; i < m; ++i) card *= static_cast<long double>(d->ps);
    if (card > static_cast<long double>(std::uint64_t{1} << 62)) fail(ErrorCode::Unsupported, "ring too large");
    d->card = ipow(d->ps, m);
    d->charac = d->ps;
    if (m > 1) {
        if (modulus.size() != static_cast<std::size_t>(m) + 1 || modulus.back() % d->ps != 1)
            fail(ErrorCode::ReducibleModulus, "modulus must be monic of degree " + std::to_string(m));
        for (auto& c : modulus) c %= d->ps;
        d->modulus = std::move(modulus);
    } else {
        d->modulus = {0, 1};
    }
    if (s > 1) {
        std::vector<Elem> red(d->modulus.size());
        std::transform(d->modulus.begin(), d->modulus.end(), red.begin(), [p](Elem c) { return c % p; });
        d->residue = Ring::chain(p, 1, m, m > 1 ? red : std::vector<Elem>{});
    }
    build_tables(*d);
    return Ring(std::move(d));
}

Ring Ring::local_algebra(int m) {
    if (m < 1 || m > 4) fail(ErrorCode::Unsupported, "Rm(m) supports 1 <= m <= 4");
    auto d = std::make_shared<RingData>();
    d->kind = RingKind::LocalAlgebra;
    d->gens = m;
    d->card = std::uint64_t{1} << (std::uint64_t{1} << m);
    d->charac = 2;
    d->residue = Ring::integers_mod(2, 1);
    build_tables(*d);
    return Ring(std::move(d));
}

Ring Ring::composite(std::vector<Ring> components) {
    if (components.empty()) fail(ErrorCode::Unsupported, "composite ring needs components");
    for (const auto& c : components)
        if (!c.is_local()) fail(ErrorCode::NotLocal, "composite components must be local rings");
    std::stable_sort(components.begin(), components.end(),
                     [](const Ring& a, const Ring& b) { return a.characteristic() < b.characteristic(); });
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j)
            if (std::gcd(components[i].characteristic(), components[j].characteristic()) != 1)
                fail(ErrorCode::NonCoprime, "component characteristics must be pairwise coprime");
    if (components.size() == 1) return components.front();
    auto d = std::make_shared<RingData>();
    d->kind = RingKind::Composite;
    d->card = 1;
    d->charac = 1;
    d->integer_like = true;
    for (const auto& c : components) {
        d->radix.push_back(d->card);
        long double next = static_cast<long double>(d->card) * static_cast<long double>(c.cardinality());
        if (next > static_cast<long double>(std::uint64_t{1} << 62)) fail(ErrorCode::Unsupported, "ring too large");
        d->card *= c.cardinality();
        d->charac *= c.characteristic();
        d->integer_like = d->integer_like && c.is_integer_residue();
    }
    d->comps = std::move(components);
    build_tables(*d);
    return Ring(std::move(d));
}

const detail::RingData& Ring::data() const {
    if (!d_) fail(ErrorCode::Unsupported, "use of an empty ring");
    return *d_;
}

// ---------------------------------------------------------------------------
// Accessors

RingKind Ring::kind() const { return data().kind; }
bool Ring::is_field() const {
    const auto& d = data();
    return d.kind == RingKind::Chain && d.s == 1;
}
bool Ring::is_integer_residue() const {
    const auto& d = data();
    return (d.kind == RingKind::Chain && d.m == 1) || (d.kind == RingKind::Composite && d.integer_like);
}
std::uint64_t Ring::cardinality() const { return data().card; }
std::uint64_t Ring::characteristic() const { return data().charac; }
std::uint64_t Ring::p() const { return data().kind == RingKind::LocalAlgebra ? 2 : data().p; }
int Ring::s() const { return data().s; }
int Ring::m() const { return data().m; }
std::uint64_t Ring::p_pow_s() const { return data().ps; }
const std::vector<Elem>& Ring::modulus() const { return data().modulus; }
int Ring::algebra_generators() const { return data().gens; }
std::size_t Ring::component_count() const {
    return data().kind == RingKind::Composite ? data().comps.size() : 1;
}
const Ring& Ring::component(std::size_t j) const {
    if (data().kind != RingKind::Composite) {
        if (j != 0) fail(ErrorCode::ShapeMismatch, "component index out of range");
        return *this;
    }
    return data().comps.at(j);
}
const std::vector<Ring>& Ring::components() const { return data().comps; }

std::uint64_t Ring::residue_size() const {
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain: return ipow(d.p, d.m);
    case RingKind::LocalAlgebra: return 2;
    case RingKind::Composite: break;
    }
    fail(ErrorCode::NotLocal, "composite rings have no single residue field");
}

Elem Ring::one() const {
    const auto& d = data();
    if (d.kind != RingKind::Composite) return 1;
    Elem a = 0;
    for (std::size_t j = 0; j < d.comps.size(); ++j) a += d.radix[j];
    return a;
}

// ---------------------------------------------------------------------------
// Arithmetic

Elem Ring::add(Elem a, Elem b) const {
    const auto& d = data();
    if (!d.add_tab.empty()) return d.add_tab[a * d.card + b];
    return raw_add(d, a, b);
}

Elem Ring::neg(Elem a) const {
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain: return chain_neg(d, a);
    case RingKind::LocalAlgebra: return a;
    case RingKind::Composite: {
        auto x = comp_split(d, a);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = d.comps[j].neg(x[j]);
        return comp_pack(d, x);
    }
    }
    return 0;
}

Elem Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Ring::mul(Elem a, Elem b) const {
    const auto& d = data();
    if (!d.mul_tab.empty()) return d.mul_tab[a * d.card + b];
    return raw_mul(d, a, b);
}

Elem Ring::pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e) {
        if (e & 1U) r = mul(r, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return r;
}

Elem Ring::times(Elem a, std::uint64_t n) const {
    Elem r = zero();
    Elem b = a;
    while (n) {
        if (n & 1U) r = add(r, b);
        b = add(b, b);
        n >>= 1U;
    }
    return r;
}

bool Ring::is_unit(Elem a) const {
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain:
        for (auto c : chain_coords(d, a))
            if (c % d.p != 0) return true;
        return false;
    case RingKind::LocalAlgebra: return (a & 1U) != 0;
    case RingKind::Composite:
        for (std::size_t j = 0; const auto part : comp_split(d, a))
            if (!d.comps[j++].is_unit(part)) return false;
        return true;
    }
    return false;
}

Elem Ring::inverse(Elem a) const {
    if (!is_unit(a)) fail(ErrorCode::NotUnit, "inverse of a non-unit");
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain: {
        if (d.m == 1) return inverse_mod(a, d.ps);
        if (d.s == 1) return pow(a, d.card - 2);
        // Newton iteration x <- x(2 - ax) doubles the theta-adic precision.
        Elem x = embed_residue(d.residue.inverse(residue(a)));
        const Elem two = from_integer(2);
        for (int i = 0; i < 64 && mul(a, x) != one(); ++i) x = mul(x, sub(two, mul(a, x)));
        return x;
    }
    case RingKind::LocalAlgebra: {
        // a = 1 + n with n nilpotent of index <= m + 1.
        const Elem n = a ^ 1U;
        Elem r = 1, term = 1;
        for (int i = 0; i < d.gens; ++i) {
            term = mul(term, n);
            r ^= term;
        }
        return r;
    }
    case RingKind::Composite: {
        auto x = comp_split(d, a);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = d.comps[j].inverse(x[j]);
        return comp_pack(d, x);
    }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Residue field

Ring Ring::residue_field() const {
    const auto& d = data();
    if (d.kind == RingKind::Composite) fail(ErrorCode::NotLocal, "composite rings have no single residue field");
    if (d.kind == RingKind::Chain && d.s == 1) return *this;
    return d.residue;
}

Elem Ring::residue(Elem a) const {
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain: {
        if (d.s == 1) return a;
        Elem r = 0, scale = 1;
        for (auto c : chain_coords(d, a)) {
            r += (c % d.p) * scale;
            scale *= d.p;
        }
        return r;
    }
    case RingKind::LocalAlgebra: return a & 1U;
    case RingKind::Composite: break;
    }
    fail(ErrorCode::NotLocal, "residue projection requires a local ring");
}

Elem Ring::embed_residue(Elem b) const {
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain: {
        if (d.s == 1) return b;
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d.m));
        for (auto& x : c) {
            x = b % d.p;
            b /= d.p;
        }
        return chain_pack(d, c);
    }
    case RingKind::LocalAlgebra: return b & 1U;
    case RingKind::Composite: break;
    }
    fail(ErrorCode::NotLocal, "residue embedding requires a local ring");
}

// ---------------------------------------------------------------------------
// Chain helpers

int Ring::valuation(Elem a) const {
    const auto& d = data();
    if (d.kind != RingKind::Chain) fail(ErrorCode::Unsupported, "valuation requires a chain ring");
    int v = d.s;
    for (auto c : chain_coords(d, a)) {
        if (c == 0) continue;
        int k = 0;
        while (c % d.p == 0) {
            c /= d.p;
            ++k;
        }
        v = std::min(v, k);
    }
    return v;
}

Elem Ring::theta_pow(int v) const {
    const auto& d = data();
    if (v >= d.s) return 0;
    return ipow(d.p, v);
}

Elem Ring::divide_theta(Elem a, int v) const {
    const auto& d = data();
    const std::uint64_t f = ipow(d.p, v);
    auto c = chain_coords(d, a);
    for (auto& x : c) x /= f;
    return chain_pack(d, c);
}

Elem Ring::reduce_theta(Elem a, int v) const {
    const auto& d = data();
    const std::uint64_t f = ipow(d.p, v);
    auto c = chain_coords(d, a);
    for (auto& x : c) x %= f;
    return chain_pack(d, c);
}

std::vector<Elem> Ring::coordinates(Elem a) const {
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain: return chain_coords(d, a);
    case RingKind::LocalAlgebra: {
        std::vector<Elem> c(std::size_t{1} << d.gens);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a >> i) & 1U;
        return c;
    }
    case RingKind::Composite: return comp_split(d, a);
    }
    return {};
}

Elem Ring::from_coordinates(std::span<const std::uint64_t> coords) const {
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain:
        if (coords.size() != static_cast<std::size_t>(d.m)) fail(ErrorCode::Parse, "wrong coordinate count");
        return chain_pack(d, coords);
    case RingKind::LocalAlgebra: {
        if (coords.size() != (std::size_t{1} << d.gens)) fail(ErrorCode::Parse, "wrong coordinate count");
        Elem a = 0;
        for (std::size_t i = 0; i < coords.size(); ++i) a |= (coords[i] & 1U) << i;
        return a;
    }
    case RingKind::Composite:
        if (coords.size() != d.comps.size()) fail(ErrorCode::Parse, "wrong component count");
        return compose(coords);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// CRT

std::vector<Elem> Ring::split(Elem a) const {
    const auto& d = data();
    if (d.kind != RingKind::Composite) return {a};
    return comp_split(d, a);
}

Elem Ring::compose(std::span<const Elem> parts) const {
    const auto& d = data();
    if (d.kind != RingKind::Composite) {
        if (parts.size() != 1) fail(ErrorCode::ShapeMismatch, "component count mismatch");
        return parts[0];
    }
    if (parts.size() != d.comps.size()) fail(ErrorCode::ShapeMismatch, "component count mismatch");
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (parts[j] >= d.comps[j].cardinality()) fail(ErrorCode::RingMismatch, "component element out of range");
    return comp_pack(d, parts);
}

Elem Ring::from_integer(std::int64_t v) const {
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain: {
        const auto mod = static_cast<std::int64_t>(d.ps);
        return static_cast<Elem>(((v % mod) + mod) % mod);
    }
    case RingKind::LocalAlgebra: return static_cast<Elem>(((v % 2) + 2) % 2);
    case RingKind::Composite: {
        std::vector<Elem> parts(d.comps.size());
        for (std::size_t j = 0; j < parts.size(); ++j) parts[j] = d.comps[j].from_integer(v);
        return comp_pack(d, parts);
    }
    }
    return 0;
}

std::uint64_t Ring::to_integer(Elem a) const {
    const auto& d = data();
    if (d.kind == RingKind::Chain && d.m == 1) return a;
    if (d.kind != RingKind::Composite || !d.integer_like)
        fail(ErrorCode::Unsupported, "integer view requires a ring Z_N");
    const auto parts = comp_split(d, a);
    const std::uint64_t n = d.charac;
    unsigned __int128 x = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        const std::uint64_t nj = d.comps[j].characteristic();
        const std::uint64_t mj = n / nj;
        const std::uint64_t inv = inverse_mod(mj % nj, nj);
        x += static_cast<unsigned __int128>(parts[j]) * mj % n * inv;
        x %= n;
    }
    return static_cast<std::uint64_t>(x);
}

std::string Ring::spec() const {
    const auto& d = data();
    switch (d.kind) {
    case RingKind::Chain:
        if (d.m == 1) return "Z" + std::to_string(d.ps);
        if (d.s == 1)
            return "Fq(" + std::to_string(d.p) + "," + std::to_string(d.m) + ");modulus=" +
                   integer_poly_text(d.modulus);
        return "GR(" + std::to_string(d.ps) + "," + std::to_string(d.m) + ");modulus=" + integer_poly_text(d.modulus);
    case RingKind::LocalAlgebra: return "Rm(" + std::to_string(d.gens) + ")";
    case RingKind::Composite: {
        if (d.integer_like) return "Z" + std::to_string(d.charac);
        std::string out = "CRT[";
        for (std::size_t j = 0; j < d.comps.size(); ++j) {
            if (j) out += " | ";
            out += d.comps[j].spec();
        }
        return out + "]";
    }
    }
    return {};
}

bool Ring::operator==(const Ring& other) const {
    if (d_ == other.d_) return true;
    if (!d_ || !other.d_) return false;
    const auto& a = *d_;
    const auto& b = *other.d_;
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case RingKind::Chain: return a.p == b.p && a.s == b.s && a.m == b.m && a.modulus == b.modulus;
    case RingKind::LocalAlgebra: return a.gens == b.gens;
    case RingKind::Composite: return a.comps == b.comps;
    }
    return false;
}

// ---------------------------------------------------------------------------
// RingElement

namespace {
void check_same(const Ring& a, const Ring& b) {
    if (a != b) fail(ErrorCode::RingMismatch, "operands belong to different rings: " + a.spec() + " vs " + b.spec());
}
} // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    check_same(a.ring_, b.ring_);
    return {a.ring_, a.ring_.add(a.code_, b.code_)};
}
RingElement operator-(const RingElement& a, const RingElement& b) {
    check_same(a.ring_, b.ring_);
    return {a.ring_, a.ring_.sub(a.code_, b.code_)};
}
RingElement operator*(const RingElement& a, const RingElement& b) {
    check_same(a.ring_, b.ring_);
    return {a.ring_, a.ring_.mul(a.code_, b.code_)};
}

// ---------------------------------------------------------------------------
// Epimorphism

Epimorphism Epimorphism::residue_projection(const Ring& source) {
    return {Rule::ResidueProjection, source, source.residue_field(), 0};
}

Epimorphism Epimorphism::nilpotency_reduction(const Ring& source, int t) {
    if (!source.is_chain()) fail(ErrorCode::Unsupported, "nilpotency reduction requires a chain ring");
    if (t < 1 || t > source.s()) fail(ErrorCode::Unsupported, "reduction exponent out of range");
    std::vector<Elem> mod;
    if (source.m() > 1) {
        const std::uint64_t pt = ipow(source.p(), t);
        for (auto c : source.modulus()) mod.push_back(c % pt);
    }
    return {Rule::NilpotencyReduction, source, Ring::chain(source.p(), t, source.m(), mod), 0};
}

Epimorphism Epimorphism::algebra_projection(const Ring& source) {
    if (source.kind() != RingKind::LocalAlgebra) fail(ErrorCode::Unsupported, "algebra projection requires Rm(m)");
    return {Rule::AlgebraProjection, source, source.residue_field(), 0};
}

Epimorphism Epimorphism::component_projection(const Ring& source, std::size_t j) {
    if (source.kind() != RingKind::Composite) fail(ErrorCode::Unsupported, "component projection requires a composite ring");
    if (j >= source.component_count()) fail(ErrorCode::ShapeMismatch, "component index out of range");
    return {Rule::ComponentProjection, source, source.component(j), j};
}

Elem Epimorphism::apply(Elem a) const {
    if (a >= source_.cardinality()) fail(ErrorCode::RingMismatch, "element is not in the epimorphism's source");
    switch (rule_) {
    case Rule::ResidueProjection:
    case Rule::AlgebraProjection: return source_.residue(a);
    case Rule::NilpotencyReduction: {
        auto c = source_.coordinates(a);
        const std::uint64_t pt = target_.p_pow_s();
        for (auto& x : c) x %= pt;
        return target_.from_coordinates(c);
    }
    case Rule::ComponentProjection: return source_.split(a)[component_];
    }
    return 0;
}

Elem Epimorphism::preimage(Elem b) const {
    if (b >= target_.cardinality()) fail(ErrorCode::RingMismatch, "element is not in the epimorphism's target");
    switch (rule_) {
    case Rule::ResidueProjection:
    case Rule::AlgebraProjection: return source_.embed_residue(b);
    case Rule::NilpotencyReduction: return source_.from_coordinates(target_.coordinates(b));
    case Rule::ComponentProjection: {
        if (source_.is_integer_residue()) return source_.from_integer(static_cast<std::int64_t>(b));
        std::vector<Elem> parts(source_.component_count(), 0);
        parts[component_] = b;
        return source_.compose(parts);
    }
    }
    return 0;
}

} // namespace lcdring
