#include "evo/format.hpp"

#include <cctype>

namespace evo {

void TextScanner::skip_space() {
    while (pos_ < text_.size()) {
        char c = text_[pos_];
        if (c == '#') {  // comment to end of line
            while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        } else if (isspace(static_cast<unsigned char>(c))) {
            ++pos_;
        } else {
            break;
        }
    }
}

bool TextScanner::at_end() {
    skip_space();
    return pos_ >= text_.size();
}

char TextScanner::peek() {
    return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool TextScanner::consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
        ++pos_;
        return true;
    }
    return false;
}

void TextScanner::expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
}

bool TextScanner::lookahead_word(const std::string& w) {
    skip_space();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    size_t after = pos_ + w.size();
    if (after < text_.size()) {
        char c = text_[after];
        if (isalnum(static_cast<unsigned char>(c)) || c == '_') return false;
    }
    pos_ = after;
    return true;
}

std::string TextScanner::ident() {
    skip_space();
    size_t start = pos_;
    if (pos_ < text_.size() &&
        (isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
        while (pos_ < text_.size() &&
               (isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return text_.substr(start, pos_ - start);
}

std::string TextScanner::digits() {
    skip_space();
    size_t start = pos_;
    while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return text_.substr(start, pos_ - start);
}

}  // namespace evo
