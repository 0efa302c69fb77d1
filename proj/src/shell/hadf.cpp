#include "hopfcalc/hadf.hpp"

#include <cctype>
#include <sstream>

namespace hopfcalc {

HadfError::HadfError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos),
      message_(message)
{
}

Field DefinitionDocument::field() const { return prime_field ? Field::prime(prime) : Field::rational(); }

const NamedVectors* DefinitionDocument::find_ideal(std::string_view name) const
{
    for (const auto& i : ideals)
        if (i.name == name)
            return &i;
    return nullptr;
}

const NamedVectors* DefinitionDocument::find_character(std::string_view name) const
{
    for (const auto& c : characters)
        if (c.name == name)
            return &c;
    return nullptr;
}

bool operator==(const DefinitionDocument& a, const DefinitionDocument& b)
{
    return a.prime_field == b.prime_field && a.prime == b.prime && a.dim == b.dim && a.basis == b.basis &&
           a.unit == b.unit && a.mult == b.mult && a.comult == b.comult && a.counit == b.counit &&
           a.antipode == b.antipode && a.ideals == b.ideals && a.characters == b.characters;
}

namespace {

struct Token {
    std::string text;
    SourcePos pos;
};

bool is_punct(char c) { return c == ':' || c == ';' || c == ','; }

std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const SourcePos pos{line_no, i + 1};
        if (is_punct(c)) {
            out.push_back({std::string(1, c), pos});
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && !is_punct(line[j]) &&
               line[j] != '#')
            ++j;
        out.push_back({std::string(line.substr(i, j - i)), pos});
        i = j;
    }
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, SourcePos end) : tokens_(std::move(tokens)), end_(end) {}

    bool done() const { return next_ >= tokens_.size(); }
    const Token& peek() const { return tokens_.at(next_); }
    SourcePos here() const { return done() ? end_ : peek().pos; }

    const Token& take(const std::string& what)
    {
        if (done())
            throw HadfError(end_, "expected " + what + " before end of line");
        return tokens_[next_++];
    }

    void expect(const std::string& punct)
    {
        const Token& t = take("'" + punct + "'");
        if (t.text != punct)
            throw HadfError(t.pos, "expected '" + punct + "', found '" + t.text + "'");
    }

    bool accept(const std::string& punct)
    {
        if (!done() && peek().text == punct) {
            ++next_;
            return true;
        }
        return false;
    }

    std::size_t index(const std::string& what, std::size_t limit)
    {
        const Token& t = take(what);
        std::size_t value = 0;
        if (t.text.empty() || t.text.size() > 9)
            throw HadfError(t.pos, what + " must be a non-negative integer, found '" + t.text + "'");
        for (char c : t.text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw HadfError(t.pos, what + " must be a non-negative integer, found '" + t.text + "'");
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        if (value >= limit)
            throw HadfError(t.pos, what + " " + t.text + " out of range (must be < " + std::to_string(limit) + ")");
        return value;
    }

    mpq_class scalar()
    {
        const Token& t = take("a coefficient");
        if (is_punct(t.text[0]))
            throw HadfError(t.pos, "expected a coefficient, found '" + t.text + "'");
        try {
            const Scalar s = Scalar::parse(Field::rational(), t.text);
            return s.rational();
        } catch (const std::exception&) {
            throw HadfError(t.pos, "malformed coefficient '" + t.text + "' (expected an integer or p/q)");
        }
    }

    /// Exactly n scalars up to the next ';' or end of line.
    std::vector<mpq_class> scalars(std::size_t n, const std::string& what)
    {
        const SourcePos start = here();
        std::vector<mpq_class> out;
        while (!done() && peek().text != ";") {
            if (out.size() == n)
                throw HadfError(peek().pos, what + " has more than " + std::to_string(n) + " coefficients");
            out.push_back(scalar());
        }
        if (out.size() != n)
            throw HadfError(start, what + " has " + std::to_string(out.size()) + " coefficients, expected " +
                                       std::to_string(n));
        return out;
    }

    void finish()
    {
        if (!done())
            throw HadfError(peek().pos, "unexpected token '" + peek().text + "'");
    }

private:
    std::vector<Token> tokens_;
    SourcePos end_;
    std::size_t next_ = 0;
};

bool valid_name(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '\''))
            return false;
    return true;
}

std::string q_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

DefinitionDocument parse_hadf(std::string_view text)
{
    DefinitionDocument doc;
    bool have_field = false;
    bool have_dim = false;
    std::size_t line_no = 0;
    std::size_t start = 0;

    auto claim = [&](const std::string& key, SourcePos pos) {
        auto [it, fresh] = doc.positions.emplace(key, pos);
        if (!fresh)
            throw HadfError(pos, "duplicate clause '" + key + "' (first at line " + std::to_string(it->second.line) +
                                     ")");
    };
    auto need_dim = [&](const Token& kw) {
        if (!have_field)
            throw HadfError(kw.pos, "'" + kw.text + "' before the field declaration");
        if (!have_dim)
            throw HadfError(kw.pos, "'" + kw.text + "' before the dim declaration");
    };

    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos)
            stop = text.size();
        std::string_view line = text.substr(start, stop - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        ++line_no;
        const bool last = stop == text.size();
        start = stop + 1;

        auto tokens = tokenize_line(line, line_no);
        if (tokens.empty()) {
            if (last)
                break;
            continue;
        }
        LineParser p(std::move(tokens), SourcePos{line_no, line.size() + 1});
        const Token kw = p.take("a keyword");
        const std::size_t n = doc.dim;

        if (kw.text == "field") {
            claim("field", kw.pos);
            const Token& kind = p.take("'rational' or 'gf'");
            if (kind.text == "rational") {
                doc.prime_field = false;
            } else if (kind.text == "gf") {
                const Token& pt = p.take("a prime");
                try {
                    std::size_t used = 0;
                    const unsigned long long v = std::stoull(pt.text, &used);
                    if (used != pt.text.size())
                        throw std::invalid_argument("trailing");
                    Field::prime(v);
                    doc.prime = v;
                } catch (const std::exception&) {
                    throw HadfError(pt.pos, "'" + pt.text + "' is not a prime below 2^61");
                }
                doc.prime_field = true;
            } else {
                throw HadfError(kind.pos, "unknown field '" + kind.text + "' (expected 'rational' or 'gf')");
            }
            have_field = true;
        } else if (kw.text == "dim") {
            if (!have_field)
                throw HadfError(kw.pos, "'dim' before the field declaration");
            claim("dim", kw.pos);
            doc.dim = p.index("dimension", 4097);
            if (doc.dim == 0)
                throw HadfError(kw.pos, "dimension must be positive");
            have_dim = true;
        } else if (kw.text == "basis") {
            need_dim(kw);
            claim("basis", kw.pos);
            while (!p.done()) {
                const Token& t = p.take("a basis name");
                if (!valid_name(t.text))
                    throw HadfError(t.pos, "invalid basis name '" + t.text + "'");
                for (const auto& b : doc.basis)
                    if (b == t.text)
                        throw HadfError(t.pos, "repeated basis name '" + t.text + "'");
                if (doc.basis.size() == n)
                    throw HadfError(t.pos, "more than " + std::to_string(n) + " basis names");
                doc.basis.push_back(t.text);
            }
            if (doc.basis.size() != n)
                throw HadfError(kw.pos, "basis has " + std::to_string(doc.basis.size()) + " names, expected " +
                                            std::to_string(n));
        } else if (kw.text == "unit" || kw.text == "counit") {
            need_dim(kw);
            claim(kw.text, kw.pos);
            (kw.text == "unit" ? doc.unit : doc.counit) = p.scalars(n, kw.text);
        } else if (kw.text == "mult") {
            need_dim(kw);
            const std::size_t i = p.index("left index", n);
            const std::size_t j = p.index("right index", n);
            claim("mult " + std::to_string(i) + " " + std::to_string(j), kw.pos);
            p.expect(":");
            doc.mult[{i, j}] = p.scalars(n, "mult " + std::to_string(i) + " " + std::to_string(j));
        } else if (kw.text == "comult") {
            need_dim(kw);
            const std::size_t i = p.index("index", n);
            claim("comult " + std::to_string(i), kw.pos);
            p.expect(":");
            auto& terms = doc.comult[i];
            if (!p.done()) {
                do {
                    ComultEntry e;
                    e.left = p.index("left tensor index", n);
                    p.expect(",");
                    e.right = p.index("right tensor index", n);
                    p.expect(",");
                    e.coeff = p.scalar();
                    terms.push_back(e);
                } while (p.accept(";"));
            }
        } else if (kw.text == "antipode") {
            need_dim(kw);
            const std::size_t i = p.index("index", n);
            claim("antipode " + std::to_string(i), kw.pos);
            p.expect(":");
            doc.antipode[i] = p.scalars(n, "antipode " + std::to_string(i));
        } else if (kw.text == "ideal" || kw.text == "character") {
            need_dim(kw);
            const Token& name = p.take("a name");
            if (!valid_name(name.text))
                throw HadfError(name.pos, "invalid " + kw.text + " name '" + name.text + "'");
            claim(kw.text + " " + name.text, kw.pos);
            p.expect(":");
            NamedVectors nv{name.text, {}};
            if (kw.text == "character") {
                nv.vectors.push_back(p.scalars(n, "character " + name.text));
                doc.characters.push_back(std::move(nv));
            } else {
                if (!p.done()) {
                    do
                        nv.vectors.push_back(p.scalars(n, "ideal " + name.text + " generator"));
                    while (p.accept(";"));
                }
                doc.ideals.push_back(std::move(nv));
            }
        } else {
            throw HadfError(kw.pos, "unknown keyword '" + kw.text + "'");
        }
        p.finish();
        if (last)
            break;
    }

    const SourcePos end{line_no == 0 ? 1 : line_no + (text.empty() || text.back() == '\n' ? 0 : 1), 1};
    const SourcePos eof = text.empty() ? SourcePos{1, 1} : end;
    if (!have_field)
        throw HadfError(eof, "missing field declaration");
    if (!have_dim)
        throw HadfError(eof, "missing dim declaration");
    const std::size_t n = doc.dim;
    if (doc.basis.empty())
        throw HadfError(eof, "missing basis declaration");
    if (doc.unit.empty())
        throw HadfError(eof, "missing unit declaration");
    if (doc.counit.empty())
        throw HadfError(eof, "missing counit declaration");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (!doc.mult.count({i, j}))
                throw HadfError(eof, "missing mult clause for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        if (!doc.comult.count(i))
            throw HadfError(eof, "missing comult clause for " + std::to_string(i));
        if (!doc.antipode.count(i))
            throw HadfError(eof, "missing antipode clause for " + std::to_string(i));
    }
    return doc;
}

std::string serialize_hadf(const DefinitionDocument& doc)
{
    std::ostringstream out;
    auto vec = [&](const std::vector<mpq_class>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? " " : "") << q_text(v[i]);
    };
    out << "field " << (doc.prime_field ? "gf " + std::to_string(doc.prime) : std::string("rational")) << "\n";
    out << "dim " << doc.dim << "\n";
    out << "basis";
    for (const auto& b : doc.basis)
        out << " " << b;
    out << "\nunit ";
    vec(doc.unit);
    out << "\n";
    for (const auto& [key, v] : doc.mult) {
        out << "mult " << key.first << " " << key.second << " : ";
        vec(v);
        out << "\n";
    }
    for (const auto& [i, terms] : doc.comult) {
        out << "comult " << i << " :";
        for (std::size_t t = 0; t < terms.size(); ++t)
            out << (t ? " ; " : " ") << terms[t].left << "," << terms[t].right << "," << q_text(terms[t].coeff);
        out << "\n";
    }
    out << "counit ";
    vec(doc.counit);
    out << "\n";
    for (const auto& [i, v] : doc.antipode) {
        out << "antipode " << i << " : ";
        vec(v);
        out << "\n";
    }
    for (const auto& ideal : doc.ideals) {
        out << "ideal " << ideal.name << " :";
        for (std::size_t g = 0; g < ideal.vectors.size(); ++g) {
            out << (g ? " ; " : " ");
            vec(ideal.vectors[g]);
        }
        out << "\n";
    }
    for (const auto& c : doc.characters) {
        out << "character " << c.name << " : ";
        vec(c.vectors.front());
        out << "\n";
    }
    return out.str();
}

namespace {

Scalar convert(const Field& field, const mpq_class& q, const DefinitionDocument& doc, const std::string& key)
{
    try {
        return Scalar(field, q);
    } catch (const std::domain_error&) {
        const auto it = doc.positions.find(key);
        throw HadfError(it == doc.positions.end() ? SourcePos{} : it->second,
                        "coefficient " + q.get_str() + " has no image in " + field.to_string());
    }
}

}  // namespace

std::vector<AlgebraElement> build_vectors(const DefinitionDocument& doc, const NamedVectors& named, const Field& field)
{
    const std::string key = (doc.find_character(named.name) == &named ? "character " : "ideal ") + named.name;
    std::vector<AlgebraElement> out;
    for (const auto& v : named.vectors) {
        AlgebraElement a;
        for (const auto& q : v)
            a.push_back(convert(field, q, doc, key));
        out.push_back(std::move(a));
    }
    return out;
}

HopfAlgebra build_algebra(const DefinitionDocument& doc, const std::optional<Field>& field_override)
{
    const Field field = field_override ? *field_override : doc.field();
    const std::size_t n = doc.dim;
    HopfData d;
    d.field = field;
    d.basis_names = doc.basis;
    d.mult.assign(n * n * n, Scalar::zero(field));
    d.comult.assign(n * n * n, Scalar::zero(field));
    for (const auto& [key, v] : doc.mult) {
        const std::string k = "mult " + std::to_string(key.first) + " " + std::to_string(key.second);
        for (std::size_t c = 0; c < n; ++c)
            d.mult[(key.first * n + key.second) * n + c] = convert(field, v[c], doc, k);
    }
    for (const auto& [i, terms] : doc.comult)
        for (const auto& t : terms)
            d.comult[(i * n + t.left) * n + t.right] += convert(field, t.coeff, doc, "comult " + std::to_string(i));
    for (const auto& q : doc.unit)
        d.unit.push_back(convert(field, q, doc, "unit"));
    for (const auto& q : doc.counit)
        d.counit.push_back(convert(field, q, doc, "counit"));
    d.antipode = Matrix(field, n, n);
    for (const auto& [i, v] : doc.antipode)
        for (std::size_t r = 0; r < n; ++r)
            d.antipode(r, i) = convert(field, v[r], doc, "antipode " + std::to_string(i));
    return HopfAlgebra(std::move(d));
}

DefinitionDocument document_from_algebra(const HopfAlgebra& h)
{
    const std::size_t n = h.dim();
    auto q = [&](const Scalar& s) { return h.field().is_rational() ? s.rational() : mpq_class(s.residue()); };
    DefinitionDocument doc;
    doc.prime_field = !h.field().is_rational();
    doc.prime = doc.prime_field ? h.field().modulus() : 0;
    doc.dim = n;
    doc.basis = h.basis_names();
    for (std::size_t i = 0; i < n; ++i) {
        doc.unit.push_back(q(h.unit()[i]));
        doc.counit.push_back(q(h.counit()[i]));
        std::vector<mpq_class> s;
        for (std::size_t r = 0; r < n; ++r)
            s.push_back(q(h.antipode()(r, i)));
        doc.antipode[i] = s;
        auto& terms = doc.comult[i];
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<mpq_class> m;
            for (std::size_t k = 0; k < n; ++k) {
                m.push_back(q(h.mult_coeff(i, j, k)));
                if (!h.comult_coeff(i, j, k).is_zero())
                    terms.push_back({j, k, q(h.comult_coeff(i, j, k))});
            }
            doc.mult[{i, j}] = m;
        }
    }
    return doc;
}

}  // namespace hopfcalc
