#include "nashforge/variety.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "nashforge/errors.hpp"
#include "nashforge/parser.hpp"

namespace nashforge {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else
            cur.push_back(c);
    }
    out.push_back(trim(cur));
    return out;
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

struct Position {
    const std::string& source;
    int line;
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(source + ":" + std::to_string(line) + ": " + msg);
    }
};

long parse_long(const Position& at, const std::string& text, const std::string& what) {
    try {
        size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        at.fail(what + " must be an integer, got '" + text + "'");
    }
}

Scalar parse_rational(const Position& at, const FieldSpec& F, const std::string& text) {
    std::string t = trim(text);
    size_t slash = t.find('/');
    std::string num = slash == std::string::npos ? t : trim(t.substr(0, slash));
    std::string den = slash == std::string::npos ? "1" : trim(t.substr(slash + 1));
    auto integer = [&](const std::string& part) {
        std::string body = part;
        bool neg = false;
        if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
            neg = body[0] == '-';
            body.erase(0, 1);
        }
        if (body.empty()) at.fail("expected a number, got '" + text + "'");
        for (char c : body)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                at.fail("expected a number, got '" + text + "'");
        mpz_class v(body);
        return neg ? mpz_class(-v) : v;
    };
    mpz_class n = integer(num), d = integer(den);
    if (d == 0) at.fail("zero denominator in '" + text + "'");
    try {
        return Scalar::from_fraction(F, n, d);
    } catch (const FieldMismatchError& e) {
        throw FieldMismatchError(at.source + ":" + std::to_string(at.line) + ": " + e.what());
    }
}

}  // namespace

VarietyInput parse_variety_text(const std::string& text, const std::string& source) {
    VarietyInput in;
    in.source = source;
    in.raw = text;

    // pass 1: collect (section, key, value, line) entries
    struct Entry {
        std::string key, value;
        int line;
    };
    std::map<std::string, std::vector<Entry>> sections;
    std::string current;
    std::istringstream stream(text);
    std::string raw_line;
    int lineno = 0;
    while (std::getline(stream, raw_line)) {
        ++lineno;
        Position at{source, lineno};
        std::string line = raw_line.substr(0, raw_line.find('#'));
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') at.fail("unterminated section header");
            current = trim(line.substr(1, line.size() - 2));
            if (current != "variety" && current != "group" && current != "task")
                at.fail("unknown section [" + current + "]");
            sections[current];
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) at.fail("expected 'key = value'");
        if (current.empty()) at.fail("key outside any section");
        sections[current].push_back({trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno});
    }

    if (!sections.count("variety")) throw ParseError(source + ": missing [variety] section");

    auto single = [&](const std::string& sec, const std::string& key) -> const Entry* {
        const Entry* found = nullptr;
        for (const auto& e : sections[sec])
            if (e.key == key) {
                if (found)
                    Position{source, e.line}.fail("duplicate key '" + key + "' in [" + sec + "]");
                found = &e;
            }
        return found;
    };
    auto check_keys = [&](const std::string& sec, std::vector<std::string> allowed) {
        for (const auto& e : sections[sec]) {
            bool ok = false;
            for (const auto& k : allowed) ok = ok || k == e.key;
            if (!ok) Position{source, e.line}.fail("unknown key '" + e.key + "' in [" + sec + "]");
        }
    };
    check_keys("variety", {"char", "vars", "ideal", "point"});

    const Entry* echar = single("variety", "char");
    if (!echar) throw ParseError(source + ": [variety] needs 'char ='");
    Position pchar{source, echar->line};
    long p = parse_long(pchar, echar->value, "char");
    if (p == 0)
        in.field = FieldSpec::rationals();
    else
        try {
            in.field = FieldSpec::prime_field(p);
        } catch (const std::exception& e) {
            pchar.fail(e.what());
        }

    const Entry* evars = single("variety", "vars");
    if (!evars) throw ParseError(source + ": [variety] needs 'vars ='");
    Position pvars{source, evars->line};
    std::vector<std::string> vars = split(evars->value, ',');
    for (const auto& v : vars)
        if (!valid_identifier(v)) pvars.fail("bad variable name '" + v + "'");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) pvars.fail("duplicate variable '" + vars[i] + "'");
    in.ring = make_ring(in.field, vars);

    std::vector<Polynomial> gens;
    for (const auto& e : sections["variety"]) {
        if (e.key != "ideal") continue;
        Position at{source, e.line};
        for (const auto& piece : split(e.value, ';')) {
            if (piece.empty()) continue;
            try {
                gens.push_back(parse_polynomial(in.ring, piece));
            } catch (const FieldMismatchError& err) {
                throw FieldMismatchError(source + ":" + std::to_string(e.line) + ": " + err.what());
            } catch (const ParseError& err) {
                at.fail(err.what());
            }
        }
    }

    if (const Entry* ep = single("variety", "point")) {
        Position at{source, ep->line};
        std::vector<std::string> coords = split(ep->value, ',');
        if (coords.size() != vars.size())
            at.fail("point needs " + std::to_string(vars.size()) + " coordinates, got " +
                    std::to_string(coords.size()));
        for (const auto& c : coords) in.point.push_back(parse_rational(at, in.field, c));

        bool origin = true;
        for (const auto& c : in.point) origin = origin && c.is_zero();
        if (!origin) {
            // recenter: x_i -> x_i + a_i, then the study point is the origin
            std::vector<Polynomial> images;
            for (size_t i = 0; i < vars.size(); ++i)
                images.push_back(Polynomial::variable(in.ring, i) +
                                 Polynomial::constant(in.ring, in.point[i]));
            for (auto& g : gens) g = g.substitute(images);
        }
        for (size_t i = 0; i < gens.size(); ++i)
            if (!gens[i].constant_term().is_zero())
                at.fail("point is not on the variety: generator #" + std::to_string(i + 1) +
                        " does not vanish there");
    } else {
        for (size_t i = 0; i < gens.size(); ++i)
            if (!gens[i].constant_term().is_zero())
                throw ParseError(source + ": the origin is not on the variety: generator #" +
                                 std::to_string(i + 1) + " has a constant term");
    }
    in.ideal = Ideal(in.ring, std::move(gens));

    if (sections.count("group")) {
        check_keys("group", {"matrix"});
        for (const auto& e : sections["group"]) {
            Position at{source, e.line};
            std::vector<std::vector<Scalar>> mat;
            for (const auto& row : split(e.value, ';')) {
                std::vector<Scalar> r;
                for (const auto& entry : split(row, ',')) r.push_back(parse_rational(at, in.field, entry));
                mat.push_back(std::move(r));
            }
            if (mat.size() != vars.size())
                at.fail("matrix needs " + std::to_string(vars.size()) + " rows");
            for (const auto& r : mat)
                if (r.size() != vars.size())
                    at.fail("matrix rows need " + std::to_string(vars.size()) + " entries");
            in.group_mats.push_back(std::move(mat));
        }
        if (in.group_mats.empty()) throw ParseError(source + ": [group] has no 'matrix =' entries");
    }

    if (sections.count("task")) {
        check_keys("task", {"kind", "order", "cutoff"});
        if (const Entry* e = single("task", "kind")) in.task_kind = e->value;
        if (const Entry* e = single("task", "order")) {
            Position at{source, e->line};
            in.order = static_cast<int>(parse_long(at, e->value, "order"));
            if (in.order < 1) at.fail("order must be >= 1");
        }
        if (const Entry* e = single("task", "cutoff")) {
            Position at{source, e->line};
            in.cutoff = static_cast<int>(parse_long(at, e->value, "cutoff"));
            if (in.cutoff < 1) at.fail("cutoff must be >= 1");
        }
    }
    return in;
}

VarietyInput parse_variety_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(path + ": cannot read file");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_variety_text(buf.str(), path);
}

}  // namespace nashforge
