// Copyright 2026 The dessins Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dessins/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "dessins/error.hpp"
#include "dessins/parallel.hpp"

namespace dessins {

Word free_reduce(const Word &w) {
    Word out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter) {
            out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    return out;
}

Word invert(const Word &w) {
    Word out(w.rbegin(), w.rend());
    for (int &letter : out) {
        letter = -letter;
    }
    return out;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        } else if (s[i] == sep && depth == 0) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    parts.push_back(trim(s.substr(start)));
    return parts;
}

class WordParser {
   public:
    WordParser(std::string_view text, const std::vector<std::string> &names) : text_(text), names_(names) {}

    Word parse() {
        Word w;
        auto eq = text_.find('=');
        if (eq != std::string_view::npos) {
            WordParser lhs(text_.substr(0, eq), names_);
            WordParser rhs(text_.substr(eq + 1), names_);
            Word l = lhs.parse();
            Word r = rhs.parse();
            Word ri = invert(r);
            l.insert(l.end(), ri.begin(), ri.end());
            return free_reduce(l);
        }
        w = product();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return free_reduce(w);
    }

   private:
    [[noreturn]] void fail(const std::string &what) const {
        throw InputError(fmt::format("cannot parse word '{}': {} at position {}", text_, what, pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    Word product() {
        Word w = factor();
        for (;;) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                Word next = factor();
                w.insert(w.end(), next.begin(), next.end());
            } else {
                return w;
            }
        }
    }

    Word factor() {
        skip_space();
        Word base;
        if (pos_ >= text_.size()) {
            fail("expected a generator");
        }
        if (text_[pos_] == '(') {
            ++pos_;
            base = product();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')') {
                fail("missing ')'");
            }
            ++pos_;
        } else if (text_[pos_] == '1' && (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
        } else {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            auto it = std::find(names_.begin(), names_.end(), name);
            if (name.empty() || it == names_.end()) {
                pos_ = start;
                fail(name.empty() ? "expected a generator" : fmt::format("unknown generator '{}'", name));
            }
            base.push_back(static_cast<int>(it - names_.begin()) + 1);
        }
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_space();
            bool negative = false;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                negative = true;
                ++pos_;
            }
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected an exponent");
            }
            int power = std::stoi(std::string(text_.substr(start, pos_ - start)));
            Word unit = negative ? invert(base) : base;
            Word out;
            for (int k = 0; k < power; ++k) {
                out.insert(out.end(), unit.begin(), unit.end());
            }
            return out;
        }
        return base;
    }

    std::string_view text_;
    const std::vector<std::string> &names_;
    std::size_t pos_ = 0;
};

}  // namespace

FinitePresentation::FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw InputError("a presentation needs at least one generator");
    }
    for (auto &r : relators) {
        for (int letter : r) {
            if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators_.size()) {
                throw InputError(fmt::format("relator letter {} out of range", letter));
            }
        }
        Word reduced = free_reduce(r);
        if (!reduced.empty()) {
            relators_.push_back(std::move(reduced));
        }
    }
}

FinitePresentation FinitePresentation::parse(std::string_view text) {
    std::vector<std::string> gens;
    std::vector<std::string> rel_texts;
    bool saw_gens = false;
    for (const auto &section : split_top(text, ';')) {
        if (section.empty()) {
            continue;
        }
        auto colon = section.find(':');
        if (colon == std::string::npos) {
            throw InputError(fmt::format("presentation section '{}' lacks a 'gens:' or 'rels:' label", section));
        }
        std::string key = trim(std::string_view(section).substr(0, colon));
        std::string body = trim(std::string_view(section).substr(colon + 1));
        if (key == "gens") {
            saw_gens = true;
            for (auto &g : split_top(body, ',')) {
                if (g.empty() || !std::all_of(g.begin(), g.end(), [](char c) {
                        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                    }) || std::isdigit(static_cast<unsigned char>(g[0]))) {
                    throw InputError(fmt::format("invalid generator name '{}'", g));
                }
                if (std::find(gens.begin(), gens.end(), g) != gens.end()) {
                    throw InputError(fmt::format("duplicate generator '{}'", g));
                }
                gens.push_back(g);
            }
        } else if (key == "rels") {
            if (!body.empty()) {
                for (auto &r : split_top(body, ',')) {
                    rel_texts.push_back(r);
                }
            }
        } else {
            throw InputError(fmt::format("unknown presentation section '{}'", key));
        }
    }
    if (!saw_gens) {
        throw InputError("presentation has no 'gens:' section");
    }
    std::vector<Word> rels;
    for (const auto &r : rel_texts) {
        rels.push_back(WordParser(r, gens).parse());
    }
    return FinitePresentation(std::move(gens), std::move(rels));
}

FinitePresentation FinitePresentation::cartographic() { return FinitePresentation({"r0", "r1"}, {{2, 2}}); }

Word FinitePresentation::parse_word(std::string_view text) const { return WordParser(text, generators_).parse(); }

std::string FinitePresentation::format_word(const Word &w) const {
    if (w.empty()) {
        return "1";
    }
    // runs of one letter are written as powers: r0*r0*r0 -> r0^3
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) {
            ++j;
        }
        long power = static_cast<long>(j - i) * (w[i] < 0 ? -1 : 1);
        if (!out.empty()) {
            out += '*';
        }
        out += generators_[static_cast<std::size_t>(std::abs(w[i]) - 1)];
        if (power != 1) {
            out += fmt::format("^{}", power);
        }
        i = j;
    }
    return out;
}

std::string FinitePresentation::to_string() const {
    std::string out = "gens: ";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        out += (i ? "," : "") + generators_[i];
    }
    out += "; rels: ";
    for (std::size_t i = 0; i < relators_.size(); ++i) {
        out += (i ? ", " : "") + format_word(relators_[i]);
    }
    return out;
}

CosetTable::CosetTable(std::size_t generator_count, std::vector<std::uint32_t> entries)
    : width_(2 * generator_count), entries_(std::move(entries)) {
    if (width_ == 0 || entries_.size() % width_ != 0) {
        throw InputError("coset table size is not a multiple of its width");
    }
    for (auto e : entries_) {
        if (e >= index()) {
            throw InputError("coset table entry out of range");
        }
    }
}

Permutation CosetTable::action(std::size_t generator) const {
    std::vector<std::uint32_t> img(index());
    for (std::size_t c = 0; c < index(); ++c) {
        img[c] = image(c, 2 * generator);
    }
    return Permutation(std::move(img));
}

namespace {

std::size_t column_of(int letter) {
    return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1;
}

std::vector<std::size_t> columns_of(const Word &w) {
    std::vector<std::size_t> cols;
    cols.reserve(w.size());
    for (int letter : w) {
        cols.push_back(column_of(letter));
    }
    return cols;
}

}  // namespace

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word &w) const {
    for (int letter : w) {
        coset = image(coset, column_of(letter));
    }
    return coset;
}

bool verify_table(const FinitePresentation &p, const CosetTable &t, const std::vector<Word> &subgroup) {
    if (t.generator_count() != p.generator_count() || t.index() == 0) {
        return false;
    }
    for (std::uint32_t c = 0; c < t.index(); ++c) {
        for (std::size_t col = 0; col < 2 * t.generator_count(); ++col) {
            if (t.image(t.image(c, col), col ^ 1) != c) {
                return false;
            }
        }
        for (const auto &r : p.relators()) {
            if (t.trace(c, r) != c) {
                return false;
            }
        }
    }
    for (const auto &w : subgroup) {
        if (t.trace(0, w) != 0) {
            return false;
        }
    }
    return true;
}

namespace {

constexpr std::int32_t kUndefined = -1;

class HltEnumerator {
   public:
    HltEnumerator(const FinitePresentation &p, std::size_t max_cosets)
        : width_(2 * p.generator_count()), max_(max_cosets) {
        for (const auto &r : p.relators()) {
            relators_.push_back(columns_of(r));
        }
        add_coset();
    }

    CosetTable run(const std::vector<Word> &subgroup, CosetEnumerationStats *stats) {
        for (const auto &w : subgroup) {
            auto cols = columns_of(free_reduce(w));
            if (!cols.empty()) {
                scan_and_fill(0, cols);
            }
        }
        for (std::size_t a = 0; a < parent_.size(); ++a) {
            for (const auto &r : relators_) {
                if (!live(a)) {
                    break;
                }
                scan_and_fill(static_cast<std::int32_t>(a), r);
            }
            if (!live(a)) {
                continue;
            }
            for (std::size_t col = 0; col < width_; ++col) {
                if (at(a, col) == kUndefined) {
                    define(static_cast<std::int32_t>(a), col);
                }
            }
        }
        if (stats) {
            stats->defined = parent_.size();
            stats->coincidences = coincidences_;
        }
        return compact();
    }

   private:
    std::int32_t &at(std::size_t coset, std::size_t col) { return table_[coset * width_ + col]; }
    bool live(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

    std::int32_t add_coset() {
        if (parent_.size() >= max_) {
            throw CapExceeded(fmt::format("coset enumeration did not close within {} cosets", max_));
        }
        auto id = static_cast<std::int32_t>(parent_.size());
        parent_.push_back(id);
        table_.resize(table_.size() + width_, kUndefined);
        return id;
    }

    void define(std::int32_t a, std::size_t col) {
        std::int32_t b = add_coset();
        at(a, col) = b;
        at(b, col ^ 1) = a;
    }

    std::int32_t rep(std::int32_t k) {
        std::int32_t root = k;
        while (parent_[root] != root) {
            root = parent_[root];
        }
        while (parent_[k] != root) {
            std::int32_t next = parent_[k];
            parent_[k] = root;
            k = next;
        }
        return root;
    }

    void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t> &queue) {
        std::int32_t a = rep(k);
        std::int32_t b = rep(l);
        if (a == b) {
            return;
        }
        std::int32_t lo = std::min(a, b);
        std::int32_t hi = std::max(a, b);
        parent_[hi] = lo;
        queue.push_back(hi);
    }

    void coincidence(std::int32_t a, std::int32_t b) {
        ++coincidences_;
        std::vector<std::int32_t> queue;
        merge(a, b, queue);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            std::int32_t g = queue[i];
            for (std::size_t col = 0; col < width_; ++col) {
                std::int32_t d = at(g, col);
                if (d == kUndefined) {
                    continue;
                }
                at(d, col ^ 1) = kUndefined;
                std::int32_t mu = rep(g);
                std::int32_t nu = rep(d);
                if (at(mu, col) != kUndefined) {
                    merge(nu, at(mu, col), queue);
                } else if (at(nu, col ^ 1) != kUndefined) {
                    merge(mu, at(nu, col ^ 1), queue);
                } else {
                    at(mu, col) = nu;
                    at(nu, col ^ 1) = mu;
                }
            }
        }
    }

    void scan_and_fill(std::int32_t a, const std::vector<std::size_t> &w) {
        std::int32_t f = a;
        std::int32_t b = a;
        std::ptrdiff_t i = 0;
        std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        for (;;) {
            while (i <= j && at(f, w[i]) != kUndefined) {
                f = at(f, w[i]);
                ++i;
            }
            if (i > j) {
                if (f != b) {
                    coincidence(f, b);
                }
                return;
            }
            while (j >= i && at(b, w[j] ^ 1) != kUndefined) {
                b = at(b, w[j] ^ 1);
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                at(f, w[i]) = b;
                at(b, w[i] ^ 1) = f;
                return;
            }
            define(f, w[i]);
        }
    }

    CosetTable compact() {
        std::vector<std::int32_t> label(parent_.size(), kUndefined);
        std::uint32_t next = 0;
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (live(c)) {
                label[c] = static_cast<std::int32_t>(next++);
            }
        }
        std::vector<std::uint32_t> entries;
        entries.reserve(next * width_);
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (!live(c)) {
                continue;
            }
            for (std::size_t col = 0; col < width_; ++col) {
                std::int32_t target = at(c, col);
                if (target == kUndefined) {
                    throw std::logic_error("coset enumeration finished with an undefined entry");
                }
                entries.push_back(static_cast<std::uint32_t>(label[rep(target)]));
            }
        }
        return CosetTable(width_ / 2, std::move(entries));
    }

    std::size_t width_;
    std::size_t max_;
    std::vector<std::vector<std::size_t>> relators_;
    std::vector<std::int32_t> table_;
    std::vector<std::int32_t> parent_;
    std::size_t coincidences_ = 0;
};

}  // namespace

CosetTable coset_enumerate(const FinitePresentation &p, const std::vector<Word> &subgroup, std::size_t max_cosets,
                           CosetEnumerationStats *stats) {
    if (max_cosets < 1) {
        throw InputError("max_cosets must be at least 1");
    }
    for (const auto &w : subgroup) {
        for (int letter : w) {
            if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > p.generator_count()) {
                throw InputError(fmt::format("subgroup word letter {} out of range", letter));
            }
        }
    }
    HltEnumerator e(p, max_cosets);
    return e.run(subgroup, stats);
}

namespace {

// Partial coset table for the low-index search. Cosets are numbered in the
// order they are first reached in row-major order, so every table visited is
// standard with respect to coset 0.
struct PartialTable {
    std::size_t width = 0;
    std::size_t cosets = 0;
    std::vector<std::int32_t> entries;

    std::int32_t get(std::size_t c, std::size_t col) const { return entries[c * width + col]; }
    void set(std::size_t c, std::size_t col, std::int32_t v) { entries[c * width + col] = v; }
};

class LowIndexSearch {
   public:
    LowIndexSearch(const FinitePresentation &p, std::size_t max_index)
        : width_(2 * p.generator_count()), max_index_(max_index) {
        for (const auto &r : p.relators()) {
            relators_.push_back(columns_of(r));
        }
    }

    PartialTable root() const {
        PartialTable t;
        t.width = width_;
        t.cosets = 1;
        t.entries.assign(max_index_ * width_, kUndefined);
        return t;
    }

    // Children of `t`, each propagated and canonical. Returns false when `t`
    // is complete.
    bool expand(const PartialTable &t, std::vector<PartialTable> &children) const {
        std::size_t slot = 0;
        const std::size_t filled_limit = t.cosets * width_;
        while (slot < filled_limit && t.entries[slot] != kUndefined) {
            ++slot;
        }
        if (slot == filled_limit) {
            return false;
        }
        std::size_t c = slot / width_;
        std::size_t col = slot % width_;
        for (std::size_t target = 0; target <= t.cosets && target < max_index_; ++target) {
            PartialTable child = t;
            if (target == t.cosets) {
                ++child.cosets;
            } else if (t.get(target, col ^ 1) != kUndefined) {
                continue;
            }
            child.set(c, col, static_cast<std::int32_t>(target));
            child.set(target, col ^ 1, static_cast<std::int32_t>(c));
            if (propagate(child) && is_canonical(child)) {
                children.push_back(std::move(child));
            }
        }
        return true;
    }

    void search(const PartialTable &t, std::vector<PartialTable> &out) const {
        std::vector<PartialTable> children;
        if (!expand(t, children)) {
            out.push_back(t);
            return;
        }
        for (const auto &child : children) {
            search(child, out);
        }
    }

   private:
    // Traces every relator from every coset, filling single gaps. Returns
    // false on a contradiction.
    bool propagate(PartialTable &t) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < t.cosets; ++c) {
                for (const auto &w : relators_) {
                    std::int32_t f = static_cast<std::int32_t>(c);
                    std::int32_t b = f;
                    std::ptrdiff_t i = 0;
                    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
                    while (i <= j && t.get(f, w[i]) != kUndefined) {
                        f = t.get(f, w[i]);
                        ++i;
                    }
                    if (i > j) {
                        if (f != b) {
                            return false;
                        }
                        continue;
                    }
                    while (j >= i && t.get(b, w[j] ^ 1) != kUndefined) {
                        b = t.get(b, w[j] ^ 1);
                        --j;
                    }
                    if (j < i) {
                        if (f != b) {
                            return false;
                        }
                    } else if (i == j) {
                        t.set(f, w[i], b);
                        t.set(b, w[i] ^ 1, f);
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    // False iff renumbering from some other base coset gives a table that is
    // already known to be smaller in row-major order.
    bool is_canonical(const PartialTable &t) const {
        std::vector<std::int32_t> label(t.cosets);
        std::vector<std::int32_t> order;
        order.reserve(t.cosets);
        for (std::size_t base = 1; base < t.cosets; ++base) {
            std::fill(label.begin(), label.end(), kUndefined);
            order.clear();
            label[base] = 0;
            order.push_back(static_cast<std::int32_t>(base));
            bool decided = false;
            for (std::size_t k = 0; k < order.size() && !decided; ++k) {
                for (std::size_t col = 0; col < width_; ++col) {
                    std::int32_t img = t.get(order[k], col);
                    std::int32_t current = t.get(k, col);
                    if (img == kUndefined || current == kUndefined) {
                        decided = true;
                        break;
                    }
                    if (label[img] == kUndefined) {
                        label[img] = static_cast<std::int32_t>(order.size());
                        order.push_back(img);
                    }
                    if (label[img] < current) {
                        return false;
                    }
                    if (label[img] > current) {
                        decided = true;
                        break;
                    }
                }
            }
        }
        return true;
    }

    std::size_t width_;
    std::size_t max_index_;
    std::vector<std::vector<std::size_t>> relators_;
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const FinitePresentation &p, std::size_t max_index,
                                            const LowIndexOptions &options) {
    if (max_index < 1) {
        throw InputError("max_index must be at least 1");
    }
    if (max_index > options.index_cap && !options.unbounded) {
        throw CapExceeded(fmt::format("max_index {} exceeds the cap of {} (use the unbounded option to lift it)",
                                      max_index, options.index_cap));
    }
    LowIndexSearch search(p, max_index);

    // Expand breadth-first into a frontier, then search subtrees in parallel.
    std::vector<PartialTable> complete;
    std::vector<PartialTable> frontier{search.root()};
    const std::size_t target = 8 * resolve_threads(options.threads);
    for (int depth = 0; depth < 6 && !frontier.empty() && frontier.size() < target; ++depth) {
        std::vector<PartialTable> next;
        for (const auto &t : frontier) {
            if (!search.expand(t, next)) {
                complete.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<PartialTable>> found(frontier.size());
    parallel_for(frontier.size(), options.threads,
                 [&](std::size_t i, unsigned) { search.search(frontier[i], found[i]); });
    for (auto &bucket : found) {
        for (auto &t : bucket) {
            complete.push_back(std::move(t));
        }
    }

    std::vector<CosetTable> tables;
    tables.reserve(complete.size());
    for (const auto &t : complete) {
        std::vector<std::uint32_t> entries(t.cosets * t.width);
        for (std::size_t k = 0; k < entries.size(); ++k) {
            entries[k] = static_cast<std::uint32_t>(t.entries[k]);
        }
        tables.emplace_back(p.generator_count(), std::move(entries));
    }
    std::sort(tables.begin(), tables.end(), [](const CosetTable &a, const CosetTable &b) {
        if (a.index() != b.index()) {
            return a.index() < b.index();
        }
        return a.entries() < b.entries();
    });
    return tables;
}

Dessin dessin_from_table(const CosetTable &t, std::size_t black_generator, std::size_t white_generator) {
    if (black_generator >= t.generator_count() || white_generator >= t.generator_count()) {
        throw InputError("dessin_from_table: generator index out of range");
    }
    return Dessin::make(t.action(black_generator), t.action(white_generator));
}

namespace {

Permutation involution_with(std::size_t n, std::size_t transpositions) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    for (std::size_t k = 0; k < transpositions; ++k) {
        std::swap(img[2 * k], img[2 * k + 1]);
    }
    return Permutation(std::move(img));
}

bool transitive(const std::vector<std::uint32_t> &a, const Permutation &b) {
    const std::size_t n = a.size();
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t w : {a[v], b(v)}) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

CycleType cycle_type_of(const std::vector<std::uint32_t> &img) {
    std::map<unsigned, unsigned, std::greater<>> counts;
    std::vector<bool> seen(img.size(), false);
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        unsigned len = 0;
        for (std::size_t j = i; !seen[j]; j = img[j]) {
            seen[j] = true;
            ++len;
        }
        ++counts[len];
    }
    return {counts.begin(), counts.end()};
}

}  // namespace

std::vector<Dessin> enumerate_dessins_direct(std::size_t n_edges, const DessinFilter &filter) {
    if (n_edges < 1) {
        throw InputError("enumerate_dessins_direct: need at least one edge");
    }
    if (n_edges > kDirectFilteredMax || (filter.empty() && n_edges > kDirectUnfilteredMax)) {
        throw CapExceeded(fmt::format("direct enumeration at {} edges exceeds the cap ({} unfiltered, {} filtered)",
                                      n_edges, kDirectUnfilteredMax, kDirectFilteredMax));
    }
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Dessin> out;
    for (std::size_t k = 0; 2 * k <= n_edges; ++k) {
        Permutation beta = involution_with(n_edges, k);
        if (filter.white && *filter.white != beta.cycle_type()) {
            continue;
        }
        std::vector<std::uint32_t> alpha(n_edges);
        std::iota(alpha.begin(), alpha.end(), 0u);
        std::vector<std::uint32_t> face(n_edges);
        do {
            if (filter.black && cycle_type_of(alpha) != *filter.black) {
                continue;
            }
            if (filter.faces) {
                // gamma = (alpha beta)^-1 has the cycle type of alpha beta
                for (std::size_t i = 0; i < n_edges; ++i) {
                    face[i] = beta(alpha[i]);
                }
                if (cycle_type_of(face) != *filter.faces) {
                    continue;
                }
            }
            if (!transitive(alpha, beta)) {
                continue;
            }
            Permutation a(alpha);
            auto form = canonical_form(a, beta);
            if (!seen.insert(form).second) {
                continue;
            }
            if (filter.group_order) {
                const Permutation gens[] = {a, beta};
                if (group_order(gens) != *filter.group_order) {
                    continue;
                }
            }
            Dessin d = canonical_dessin(Dessin::make(a, beta));
            out.push_back(std::move(d));
        } while (std::next_permutation(alpha.begin(), alpha.end()));
    }
    std::sort(out.begin(), out.end(),
              [](const Dessin &x, const Dessin &y) { return canonical_form(x) < canonical_form(y); });
    return out;
}

}  // namespace dessins
