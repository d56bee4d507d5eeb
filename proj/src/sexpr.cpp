#include <forcinglab/sexpr.hpp>

#include <cctype>

#include <forcinglab/poset.hpp>

namespace forcinglab {

std::string SExpr::to_string() const
{
    switch (kind) {
    case Kind::atom:
        return text;
    case Kind::hf:
        return hf.to_string();
    case Kind::list:
        break;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += ' ';
        out += items[i].to_string();
    }
    return out + ")";
}

namespace {

class Reader {
public:
    Reader(std::string_view text, std::string_view source) : text_(text), source_(source) {}

    bool at_end()
    {
        skip();
        return pos_ >= text_.size();
    }

    SExpr read()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        SExpr e;
        e.span = span_;
        const char c = text_[pos_];
        if (c == ')' || c == '}')
            fail(std::string("unexpected '") + c + "'");
        if (c == '(') {
            advance();
            e.kind = SExpr::Kind::list;
            for (;;) {
                skip();
                if (pos_ >= text_.size())
                    fail("unclosed '(' opened at " + e.span.to_string());
                if (text_[pos_] == ')') {
                    advance();
                    return e;
                }
                e.items.push_back(read());
            }
        }
        if (text_.substr(pos_, 2) == "#{") {
            e.kind = SExpr::Kind::hf;
            e.hf = read_hf();
            return e;
        }
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '('
            && text_[pos_] != ')' && text_[pos_] != ';' && text_[pos_] != '{' && text_[pos_] != '}') {
            e.text += text_[pos_];
            advance();
        }
        if (e.text.empty())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    HFSet read_hf()
    {
        const Span open = span_;
        advance();
        advance();
        std::vector<HFSet> elements;
        for (;;) {
            skip();
            if (pos_ >= text_.size())
                fail("unclosed '#{' opened at " + open.to_string());
            if (text_[pos_] == '}') {
                advance();
                return HFSet::make(std::move(elements));
            }
            if (text_.substr(pos_, 2) != "#{")
                fail("HF literals may only contain HF literals");
            elements.push_back(read_hf());
        }
    }

    void skip()
    {
        while (pos_ < text_.size()) {
            if (text_[pos_] == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++span_.line;
            span_.column = 1;
        } else {
            ++span_.column;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError(std::string(source_) + ":" + span_.to_string() + ": " + what);
    }

    std::string_view text_;
    std::string_view source_;
    std::size_t pos_ = 0;
    Span span_;
};

} // namespace

std::vector<SExpr> parse_sexprs(std::string_view text, std::string_view source)
{
    Reader r(text, source);
    std::vector<SExpr> out;
    while (!r.at_end())
        out.push_back(r.read());
    return out;
}

SExpr parse_sexpr(std::string_view text, std::string_view source)
{
    auto all = parse_sexprs(text, source);
    if (all.size() != 1)
        throw InputError(std::string(source) + ": expected exactly one expression, found " + std::to_string(all.size()));
    return std::move(all.front());
}

} // namespace forcinglab
