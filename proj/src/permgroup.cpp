#include "polyforge/permgroup.hpp"
#include "polyforge/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polyforge {

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images[i] != i) return false;
    return true;
}

Permutation Permutation::identity(int degree) {
    Permutation p;
    p.images.resize(degree);
    for (int i = 0; i < degree; ++i) p.images[i] = i;
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree()) throw ValidationError("compose: degree mismatch");
    Permutation r;
    r.images.resize(degree());
    for (int i = 0; i < degree(); ++i) r.images[i] = images[other.images[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(degree());
    for (int i = 0; i < degree(); ++i) r.images[images[i]] = i;
    return r;
}

int Permutation::order() const {
    Permutation p = *this;
    int n = 1;
    while (!p.is_identity()) {
        p = p.compose(*this);
        ++n;
        if (n > 1 && static_cast<size_t>(n) > images.size() * images.size() + 2)
            throw IntegrityError("order: runaway iteration");
    }
    return n;
}

std::string Permutation::to_cycles() const {
    std::vector<bool> seen(degree(), false);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images[i] == i) continue;
        any = true;
        os << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) os << ' ';
            os << (j + 1);
            seen[j] = true;
            j = images[j];
            first = false;
        } while (j != i);
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

Permutation parse_permutation(const std::string& text, int degree) {
    if (degree <= 0) throw ValidationError("parse_permutation: degree must be positive");
    Permutation p = Permutation::identity(degree);
    std::vector<bool> used(degree, false);

    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw ParseError("empty permutation string");
    bool saw_cycle = false;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(')
            throw ParseError("expected '(' at position " + std::to_string(i) + ", found '" +
                             std::string(1, text[i]) + "'");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i == text.size()) throw ParseError("unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected point at position " + std::to_string(i) + ", found '" +
                                 std::string(1, text[i]) + "'");
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::string tok = text.substr(start, i - start);
            long v = std::stol(tok);
            if (v < 1 || v > degree)
                throw ParseError("point '" + tok + "' out of range 1.." + std::to_string(degree));
            int z = static_cast<int>(v) - 1;
            if (used[z]) throw ParseError("repeated point '" + tok + "'");
            used[z] = true;
            cycle.push_back(z);
        }
        saw_cycle = true;
        for (size_t c = 0; c < cycle.size(); ++c)
            p.images[cycle[c]] = cycle[(c + 1) % cycle.size()];
    }
    if (!saw_cycle) throw ParseError("no cycles found in permutation string");
    return p;
}

int PermGroup::element_index(const Permutation& p) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return static_cast<int>(i);
    return -1;
}

int PermGroup::mul(int i, int j) const {
    int r = element_index(elements[i].compose(elements[j]));
    if (r < 0) throw IntegrityError("mul: group not closed");
    return r;
}

int PermGroup::inv(int i) const {
    int r = element_index(elements[i].inverse());
    if (r < 0) throw IntegrityError("inv: group not closed");
    return r;
}

PermGroup closure(const std::vector<Permutation>& generators, long max_elements) {
    if (generators.empty()) throw ValidationError("closure: no generators");
    int degree = generators[0].degree();
    for (const auto& g : generators) {
        if (g.degree() != degree) throw ValidationError("closure: generators of mixed degree");
        std::vector<bool> hit(degree, false);
        for (int v : g.images) {
            if (v < 0 || v >= degree || hit[v]) throw ValidationError("closure: generator not a bijection");
            hit[v] = true;
        }
    }

    PermGroup grp;
    grp.degree = degree;
    grp.generators = generators;

    std::map<std::vector<int>, int> index;
    Permutation id = Permutation::identity(degree);
    grp.elements.push_back(id);
    index[id.images] = 0;
    size_t head = 0;
    while (head < grp.elements.size()) {
        Permutation cur = grp.elements[head];
        ++head;
        for (const auto& g : generators) {
            Permutation next = cur.compose(g);
            if (index.count(next.images)) continue;
            if (static_cast<long>(grp.elements.size()) >= max_elements)
                throw ResourceError("closure: element cap " + std::to_string(max_elements) +
                                    " exceeded");
            index[next.images] = static_cast<int>(grp.elements.size());
            grp.elements.push_back(next);
        }
    }
    return grp;
}

GroupClass classify(const PermGroup& group) {
    long n = group.order();
    GroupClass cls;
    if (n == 1) {
        cls.tag = GroupClass::Trivial;
        cls.k = 1;
        return cls;
    }
    std::vector<int> orders(n);
    for (long i = 0; i < n; ++i) orders[i] = group.elements[i].order();

    for (long i = 0; i < n; ++i) {
        if (orders[i] == n) {
            cls.tag = GroupClass::Cyclic;
            cls.k = n;
            cls.witness_r = static_cast<int>(i);
            return cls;
        }
    }
    if (n >= 4 && n % 2 == 0) {
        long k = n / 2;
        for (long ri = 0; ri < n; ++ri) {
            if (orders[ri] != k) continue;
            // Mark the cyclic subgroup generated by r.
            std::vector<bool> in_r(n, false);
            int cur = 0;
            for (long t = 0; t < k; ++t) {
                in_r[cur] = true;
                cur = group.mul(cur, static_cast<int>(ri));
            }
            int rinv = group.inv(static_cast<int>(ri));
            for (long si = 0; si < n; ++si) {
                if (orders[si] != 2 || in_r[si]) continue;
                int srs = group.mul(group.mul(static_cast<int>(si), static_cast<int>(ri)),
                                    static_cast<int>(si));
                if (srs == rinv) {
                    cls.tag = GroupClass::Dihedral;
                    cls.k = k;
                    cls.witness_r = static_cast<int>(ri);
                    cls.witness_s = static_cast<int>(si);
                    return cls;
                }
            }
        }
    }
    cls.tag = GroupClass::General;
    cls.k = n;
    return cls;
}

PermGroup regular_embedding(const std::vector<std::vector<int>>& table) {
    long g = static_cast<long>(table.size());
    if (g == 0) throw ValidationError("regular_embedding: empty table");
    for (long r = 0; r < g; ++r) {
        if (static_cast<long>(table[r].size()) != g)
            throw ValidationError("regular_embedding: row " + std::to_string(r) + " has wrong length");
        for (long c = 0; c < g; ++c) {
            if (table[r][c] < 0 || table[r][c] >= g)
                throw ValidationError("regular_embedding: cell (" + std::to_string(r) + "," +
                                      std::to_string(c) + ") out of range");
        }
    }
    for (long x = 0; x < g; ++x) {
        if (table[0][x] != x)
            throw ValidationError("regular_embedding: identity row violated at column " + std::to_string(x));
        if (table[x][0] != x)
            throw ValidationError("regular_embedding: identity column violated at row " + std::to_string(x));
    }
    // Latin square check.
    for (long r = 0; r < g; ++r) {
        std::vector<bool> row_hit(g, false), col_hit(g, false);
        for (long c = 0; c < g; ++c) {
            if (row_hit[table[r][c]])
                throw ValidationError("regular_embedding: row " + std::to_string(r) +
                                      " repeats value at column " + std::to_string(c));
            row_hit[table[r][c]] = true;
            if (col_hit[table[c][r]])
                throw ValidationError("regular_embedding: column " + std::to_string(r) +
                                      " repeats value at row " + std::to_string(c));
            col_hit[table[c][r]] = true;
        }
    }
    for (long a = 0; a < g; ++a)
        for (long b = 0; b < g; ++b)
            for (long c = 0; c < g; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw ValidationError("regular_embedding: non-associative triple (" +
                                          std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");

    PermGroup grp;
    grp.degree = static_cast<int>(g);
    for (long e = 0; e < g; ++e) {
        Permutation p;
        p.images.resize(g);
        for (long x = 0; x < g; ++x) p.images[x] = table[e][x];
        grp.elements.push_back(p);
        if (e > 0 || g == 1) grp.generators.push_back(p);
    }
    return grp;
}

} // namespace polyforge
