#include "cobkit/records.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace cobkit {

namespace {

long alternating_sum(const std::vector<long>& betti) {
    long total = 0;
    for (size_t k = 0; k < betti.size(); ++k) total += (k % 2 == 0 ? 1 : -1) * betti[k];
    return total;
}

int mod2(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

void mark_all(ManifoldRecord& r, const std::string& provenance) {
    static const char* fields[] = {"closed",        "orientable",        "spin",
                                   "chi",           "betti_mod2",        "betti_rational",
                                   "semichar_mod2", "semichar_rational", "sigma",
                                   "w_top_minus_one_trivial"};
    for (const char* f : fields) r.provenance[f] = provenance;
}

}  // namespace

int ManifoldRecord::semichar(Field field) const {
    if (dimension % 2 == 0) throw EvenDimension("semi-characteristic needs odd dimension");
    const auto& stored = (field == Field::mod2) ? semichar_mod2 : semichar_rational;
    if (stored) return *stored;
    const auto& betti = (field == Field::mod2) ? betti_mod2 : betti_rational;
    if (betti) return kervaire_semichar_from_betti(*betti, dimension);
    throw MissingInvariant("record '" + name + "' has no semi-characteristic data");
}

bool ManifoldRecord::has_semichar(Field field) const {
    if (dimension % 2 == 0) return false;
    return (field == Field::mod2 ? semichar_mod2.has_value() : semichar_rational.has_value()) ||
           (field == Field::mod2 ? betti_mod2.has_value() : betti_rational.has_value());
}

ManifoldRecord ManifoldRecord::empty(int dimension) {
    ManifoldRecord r;
    r.name = "empty";
    r.dimension = dimension;
    r.closed = true;
    r.orientable = true;
    r.spin = true;
    r.chi = 0;
    r.betti_mod2 = std::vector<long>(dimension + 1, 0);
    r.betti_rational = std::vector<long>(dimension + 1, 0);
    if (dimension % 2 == 1) {
        r.semichar_mod2 = 0;
        r.semichar_rational = 0;
    }
    if (dimension % 4 == 0) r.sigma = 0;
    r.w_top_minus_one_trivial = true;
    mark_all(r, "computed");
    return r;
}

void validate_record(const ManifoldRecord& r) {
    if (r.dimension < 0) throw MalformedRecord("negative dimension");
    if (r.closed && r.dimension % 2 == 1 && r.chi != 0)
        throw MalformedRecord("closed odd-dimensional record must have chi = 0");
    if (r.sigma && r.dimension % 4 != 0)
        throw MalformedRecord("signature requires dimension 0 mod 4");
    for (const auto& betti : {r.betti_rational, r.betti_mod2}) {
        if (!betti) continue;
        if (static_cast<int>(betti->size()) != r.dimension + 1)
            throw MalformedRecord("Betti vector length must be dimension + 1");
        for (long b : *betti)
            if (b < 0) throw MalformedRecord("negative Betti number");
        if (alternating_sum(*betti) != r.chi && betti == r.betti_rational)
            throw MalformedRecord("chi differs from the rational Betti alternating sum");
    }
    if (r.betti_rational && r.betti_mod2) {
        for (size_t k = 0; k < r.betti_rational->size(); ++k)
            if ((*r.betti_mod2)[k] < (*r.betti_rational)[k])
                throw MalformedRecord("mod-2 Betti numbers must dominate rational ones");
    }
    if (r.dimension % 2 == 1) {
        if (r.semichar_mod2 && r.betti_mod2 &&
            *r.semichar_mod2 != kervaire_semichar_from_betti(*r.betti_mod2, r.dimension))
            throw MalformedRecord("semichar_mod2 differs from its Betti-derived value");
        if (r.semichar_rational && r.betti_rational &&
            *r.semichar_rational != kervaire_semichar_from_betti(*r.betti_rational, r.dimension))
            throw MalformedRecord("semichar_rational differs from its Betti-derived value");
    }
    for (auto s : {r.semichar_mod2, r.semichar_rational})
        if (s && *s != 0 && *s != 1) throw MalformedRecord("semi-characteristic must be 0 or 1");
}

ManifoldRecord from_complex(const SimplicialComplex& input, size_t budget) {
    SimplicialComplex c = input;
    normalize_and_check(c);
    ManifoldFlags flags = validate(c);
    if (!flags.is_closed) throw NotClosed("from_complex requires a closed complex");

    ManifoldRecord r;
    r.name = c.name;
    r.dimension = c.dimension();
    r.closed = true;
    HomologySummary h = homology(c);
    r.chi = h.euler_characteristic;
    r.betti_rational = h.betti_rational;
    r.betti_mod2 = h.betti_mod2;
    r.orientable = flags.is_orientable;
    if (r.dimension % 2 == 1) {
        r.semichar_mod2 = kervaire_semichar_from_betti(h.betti_mod2, r.dimension);
        r.semichar_rational = kervaire_semichar_from_betti(h.betti_rational, r.dimension);
    }
    CharacteristicClasses classes = wu_classes(c, budget);
    r.spin = classes.spin;
    if (classes.orientable != flags.is_orientable.value_or(false))
        throw Error("InternalCheck", "w1 disagrees with orientation propagation");
    if (r.dimension >= 1) r.w_top_minus_one_trivial = classes.sw_trivial[r.dimension - 1];
    if (r.dimension % 4 == 0 && flags.is_orientable.value_or(false)) r.sigma = signature(c);
    mark_all(r, "computed");
    validate_record(r);
    return r;
}

ManifoldRecord disjoint_union(const ManifoldRecord& a, const ManifoldRecord& b) {
    if (a.dimension != b.dimension)
        throw DimensionMismatch("disjoint union needs equal dimensions");
    ManifoldRecord r;
    r.name = "disjoint_union(" + a.name + "," + b.name + ")";
    r.dimension = a.dimension;
    r.closed = a.closed && b.closed;
    r.chi = a.chi + b.chi;
    if (a.orientable && b.orientable) r.orientable = *a.orientable && *b.orientable;
    if (a.spin && b.spin) r.spin = *a.spin && *b.spin;
    for (auto field : {Field::mod2, Field::rational}) {
        const auto& ba = (field == Field::mod2) ? a.betti_mod2 : a.betti_rational;
        const auto& bb = (field == Field::mod2) ? b.betti_mod2 : b.betti_rational;
        if (ba && bb) {
            std::vector<long> sum(ba->size());
            for (size_t k = 0; k < sum.size(); ++k) sum[k] = (*ba)[k] + (*bb)[k];
            ((field == Field::mod2) ? r.betti_mod2 : r.betti_rational) = std::move(sum);
        }
    }
    if (r.dimension % 2 == 1) {
        if (a.has_semichar(Field::mod2) && b.has_semichar(Field::mod2))
            r.semichar_mod2 = mod2(a.semichar(Field::mod2) + b.semichar(Field::mod2));
        if (a.has_semichar(Field::rational) && b.has_semichar(Field::rational))
            r.semichar_rational = mod2(a.semichar(Field::rational) + b.semichar(Field::rational));
    }
    if (a.sigma && b.sigma) r.sigma = *a.sigma + *b.sigma;
    if (a.w_top_minus_one_trivial && b.w_top_minus_one_trivial)
        r.w_top_minus_one_trivial = *a.w_top_minus_one_trivial && *b.w_top_minus_one_trivial;
    mark_all(r, "computed");
    return r;
}

ManifoldRecord connected_sum_record(const ManifoldRecord& a, const ManifoldRecord& b) {
    if (a.dimension != b.dimension)
        throw DimensionMismatch("connected sum needs equal dimensions");
    if (a.dimension < 1) throw BadDimension("connected sum needs dimension >= 1");
    if (!a.closed || !b.closed) throw NotClosed("connected sum requires closed records");
    if (!a.orientable.value_or(false) || !b.orientable.value_or(false))
        throw NotOriented("connected sum requires oriented records");
    const int n = a.dimension;
    const long chi_sphere = (n % 2 == 0) ? 2 : 0;

    ManifoldRecord r;
    r.name = "consum(" + a.name + "," + b.name + ")";
    r.dimension = n;
    r.closed = true;
    r.orientable = true;
    r.chi = a.chi + b.chi - chi_sphere;
    if (a.spin && b.spin) r.spin = *a.spin && *b.spin;
    for (auto field : {Field::mod2, Field::rational}) {
        const auto& ba = (field == Field::mod2) ? a.betti_mod2 : a.betti_rational;
        const auto& bb = (field == Field::mod2) ? b.betti_mod2 : b.betti_rational;
        if (ba && bb) {
            // remove one sphere's homology: subtract 1 in degrees 0 and n
            std::vector<long> sum(ba->size());
            for (size_t k = 0; k < sum.size(); ++k) sum[k] = (*ba)[k] + (*bb)[k];
            sum[0] -= 1;
            sum[n] -= 1;
            ((field == Field::mod2) ? r.betti_mod2 : r.betti_rational) = std::move(sum);
        }
    }
    if (n % 2 == 1) {
        if (r.betti_mod2) r.semichar_mod2 = kervaire_semichar_from_betti(*r.betti_mod2, n);
        else if (a.has_semichar(Field::mod2) && b.has_semichar(Field::mod2))
            r.semichar_mod2 = mod2(a.semichar(Field::mod2) + b.semichar(Field::mod2) + 1);
        if (r.betti_rational)
            r.semichar_rational = kervaire_semichar_from_betti(*r.betti_rational, n);
        else if (a.has_semichar(Field::rational) && b.has_semichar(Field::rational))
            r.semichar_rational = mod2(a.semichar(Field::rational) + b.semichar(Field::rational) + 1);
    }
    if (n % 4 == 0 && a.sigma && b.sigma) r.sigma = *a.sigma + *b.sigma;
    mark_all(r, "computed");
    validate_record(r);
    return r;
}

ManifoldRecord product_record(const ManifoldRecord& a, const ManifoldRecord& b) {
    const int n = a.dimension + b.dimension;
    ManifoldRecord r;
    r.name = "product(" + a.name + "," + b.name + ")";
    r.dimension = n;
    r.closed = a.closed && b.closed;
    r.chi = a.chi * b.chi;
    if (a.orientable && b.orientable) r.orientable = *a.orientable && *b.orientable;
    if (a.spin && b.spin) r.spin = *a.spin && *b.spin;

    bool any_field = false;
    for (auto field : {Field::mod2, Field::rational}) {
        const auto& ba = (field == Field::mod2) ? a.betti_mod2 : a.betti_rational;
        const auto& bb = (field == Field::mod2) ? b.betti_mod2 : b.betti_rational;
        if (!ba || !bb) continue;
        any_field = true;
        std::vector<long> conv(n + 1, 0);  // Kunneth over a field: plain convolution
        for (size_t i = 0; i < ba->size(); ++i)
            for (size_t j = 0; j < bb->size(); ++j) conv[i + j] += (*ba)[i] * (*bb)[j];
        ((field == Field::mod2) ? r.betti_mod2 : r.betti_rational) = std::move(conv);
    }
    if (!any_field)
        throw MissingInvariant("product of records requires Betti vectors on both factors");
    if (r.betti_rational && alternating_sum(*r.betti_rational) != r.chi)
        throw Error("InternalCheck", "Kunneth chi mismatch");

    if (n % 2 == 1) {
        if (r.betti_mod2) r.semichar_mod2 = kervaire_semichar_from_betti(*r.betti_mod2, n);
        if (r.betti_rational)
            r.semichar_rational = kervaire_semichar_from_betti(*r.betti_rational, n);
    }
    if (n % 4 == 0 && r.closed) {
        // signature is multiplicative, and vanishes unless both factor
        // dimensions are divisible by four
        if (a.dimension % 4 == 0 && b.dimension % 4 == 0) {
            if (a.sigma && b.sigma) r.sigma = *a.sigma * *b.sigma;
        } else {
            r.sigma = 0;
        }
        if (!r.sigma && r.betti_rational && (*r.betti_rational)[n / 2] == 0) r.sigma = 0;
    }
    mark_all(r, "computed");
    validate_record(r);
    return r;
}

std::vector<const ManifoldRecord*> CobordismRecord::boundary() const {
    std::vector<const ManifoldRecord*> out;
    for (const auto& m : boundary_in) out.push_back(&m);
    for (const auto& m : boundary_out) out.push_back(&m);
    return out;
}

long CobordismRecord::boundary_chi() const {
    long total = 0;
    for (const ManifoldRecord* m : boundary()) total += m->chi;
    return total;
}

void validate_cobordism_record(const CobordismRecord& w) {
    for (const ManifoldRecord* m : w.boundary()) {
        if (!m->closed) throw MalformedRecord("cobordism boundary records must be closed");
        if (m->dimension != w.total_dimension - 1)
            throw MalformedRecord("boundary dimension must be one below the total dimension");
        validate_record(*m);
    }
}

ManifoldRecord double_record(const CobordismRecord& w) {
    if (w.boundary_in.empty() && w.boundary_out.empty())
        throw EmptyBoundary("double of a cobordism needs a boundary");
    validate_cobordism_record(w);
    ManifoldRecord r;
    r.name = "double(" + w.name + ")";
    r.dimension = w.total_dimension;
    r.closed = true;
    r.chi = 2 * w.chi - w.boundary_chi();
    r.spin = w.spin;
    if (w.spin) r.orientable = true;
    if (r.dimension % 4 == 0) r.sigma = 0;
    mark_all(r, "computed");
    validate_record(r);
    return r;
}

std::pair<long, long> normalize_chi_plan(long chi, int n_plus_1) {
    if (n_plus_1 != 4) throw BadDimension("chi normalization is a 4-dimensional procedure");
    if (mod2(chi) != 0) throw OddChi("chi of a Spin cobordism must be even");
    if (chi >= 0) return {chi / 2, 0};
    return {0, -chi / 2};
}

namespace {

ManifoldRecord sphere_record(int n) {
    if (n < 0) throw UnknownCorpusName("sphere dimension must be >= 0");
    ManifoldRecord r;
    r.name = "sphere(" + std::to_string(n) + ")";
    r.dimension = n;
    r.closed = true;
    r.orientable = true;
    r.spin = true;
    std::vector<long> betti(n + 1, 0);
    if (n == 0) {
        betti[0] = 2;
    } else {
        betti[0] = 1;
        betti[n] = 1;
    }
    r.chi = alternating_sum(betti);
    r.betti_rational = betti;
    r.betti_mod2 = betti;
    if (n % 2 == 1) {
        r.semichar_mod2 = kervaire_semichar_from_betti(betti, n);
        r.semichar_rational = r.semichar_mod2;
    }
    if (n % 4 == 0) r.sigma = (n == 0) ? 2 : 0;
    if (n >= 1) r.w_top_minus_one_trivial = true;
    mark_all(r, "declared");
    return r;
}

ManifoldRecord torus_record(int n) {
    if (n < 1) throw UnknownCorpusName("torus dimension must be >= 1");
    ManifoldRecord r;
    r.name = "torus(" + std::to_string(n) + ")";
    r.dimension = n;
    r.closed = true;
    r.orientable = true;
    r.spin = true;
    std::vector<long> betti(n + 1);
    for (int k = 0; k <= n; ++k) {
        long c = 1;
        for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
        betti[k] = c;
    }
    r.chi = 0;
    r.betti_rational = betti;
    r.betti_mod2 = betti;
    if (n % 2 == 1) {
        r.semichar_mod2 = kervaire_semichar_from_betti(betti, n);
        r.semichar_rational = r.semichar_mod2;
    }
    if (n % 4 == 0) r.sigma = 0;
    r.w_top_minus_one_trivial = true;  // parallelizable
    mark_all(r, "declared");
    return r;
}

ManifoldRecord named_record(const std::string& head) {
    if (head == "k3") {
        ManifoldRecord r;
        r.name = "k3";
        r.dimension = 4;
        r.closed = true;
        r.orientable = true;
        r.spin = true;
        r.betti_rational = std::vector<long>{1, 0, 22, 0, 1};
        r.betti_mod2 = r.betti_rational;
        r.chi = 24;
        r.sigma = -16;
        r.w_top_minus_one_trivial = true;
        mark_all(r, "declared");
        return r;
    }
    if (head == "k3_reversed") {
        ManifoldRecord r = named_record("k3");
        r.name = "k3_reversed";
        r.sigma = 16;
        return r;
    }
    if (head == "poincare") {
        ManifoldRecord r;
        r.name = "poincare";
        r.dimension = 3;
        r.closed = true;
        r.orientable = true;
        r.spin = true;
        r.betti_rational = std::vector<long>{1, 0, 0, 1};
        r.betti_mod2 = r.betti_rational;  // the fundamental group is perfect
        r.chi = 0;
        r.semichar_mod2 = 1;
        r.semichar_rational = 1;
        r.w_top_minus_one_trivial = true;
        mark_all(r, "declared");
        return r;
    }
    if (head == "rp3") {
        ManifoldRecord r;
        r.name = "rp3";
        r.dimension = 3;
        r.closed = true;
        r.orientable = true;
        r.spin = true;
        r.betti_rational = std::vector<long>{1, 0, 0, 1};
        r.betti_mod2 = std::vector<long>{1, 1, 1, 1};
        r.chi = 0;
        r.semichar_mod2 = 0;
        r.semichar_rational = 1;
        r.w_top_minus_one_trivial = true;
        mark_all(r, "declared");
        return r;
    }
    if (head == "s2xs2") {
        ManifoldRecord r;
        r.name = "s2xs2";
        r.dimension = 4;
        r.closed = true;
        r.orientable = true;
        r.spin = true;
        r.betti_rational = std::vector<long>{1, 0, 2, 0, 1};
        r.betti_mod2 = r.betti_rational;
        r.chi = 4;
        r.sigma = 0;
        r.w_top_minus_one_trivial = true;
        mark_all(r, "declared");
        return r;
    }
    if (head == "point") {
        ManifoldRecord r;
        r.name = "point";
        r.dimension = 0;
        r.closed = true;
        r.orientable = true;
        r.spin = true;
        r.betti_rational = std::vector<long>{1};
        r.betti_mod2 = r.betti_rational;
        r.chi = 1;
        r.sigma = 1;
        mark_all(r, "declared");
        return r;
    }
    throw UnknownCorpusName("unknown record corpus name '" + head + "'");
}

struct RecordParser {
    const std::string& s;
    size_t pos = 0;

    explicit RecordParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    ManifoldRecord parse() {
        ManifoldRecord r = parse_expr();
        skip_ws();
        if (pos != s.size()) throw UnknownCorpusName("trailing input in '" + s + "'");
        return r;
    }

    ManifoldRecord parse_expr() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string head = s.substr(start, pos - start);
        skip_ws();
        if (head.empty()) throw UnknownCorpusName("expected a record name in '" + s + "'");
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            if (head == "product" || head == "disjoint_union" || head == "consum") {
                ManifoldRecord a = parse_expr();
                expect(',');
                ManifoldRecord b = parse_expr();
                expect(')');
                if (head == "product") return product_record(a, b);
                if (head == "disjoint_union") return disjoint_union(a, b);
                return connected_sum_record(a, b);
            }
            int n = parse_int();
            expect(')');
            if (head == "sphere") return sphere_record(n);
            if (head == "torus") return torus_record(n);
            throw UnknownCorpusName("unknown parametrized record name '" + head + "'");
        }
        return named_record(head);
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw UnknownCorpusName("expected an integer in '" + s + "'");
        return std::stoi(s.substr(start, pos - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw UnknownCorpusName(std::string("expected '") + c + "' in '" + s + "'");
        ++pos;
    }
};

}  // namespace

long euler_characteristic(const ManifoldRecord& r) { return r.chi; }

long signature(const ManifoldRecord& r) {
    if (r.dimension % 4 != 0) throw BadDimension("signature needs dimension 0 mod 4");
    if (!r.sigma) throw MissingInvariant("record '" + r.name + "' carries no signature");
    return *r.sigma;
}

int kervaire_semichar(const ManifoldRecord& r, Field field) {
    if (!r.closed) throw NotClosed("semi-characteristic needs a closed record");
    return r.semichar(field);
}

bool spin_check(const ManifoldRecord& r) {
    if (!r.closed) throw NotClosed("spin check needs a closed record");
    if (!r.spin) throw MissingInvariant("record '" + r.name + "' has no spin flag");
    return *r.spin;
}

ManifoldRecord standard_record(const std::string& name) {
    RecordParser parser(name);
    ManifoldRecord r = parser.parse();
    validate_record(r);
    return r;
}

}  // namespace cobkit
