#include "treemate/walks.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <future>
#include <map>
#include <sstream>

namespace treemate {

struct AlphabetBuilder {
    static std::shared_ptr<const StepAlphabet> build(std::string name, std::vector<Step> steps,
                                                     std::string letters,
                                                     std::vector<std::string> forbidden) {
        if (!letters.empty() && letters.size() != steps.size())
            throw Error("alphabet '" + name + "': letter count must match step count");
        for (std::size_t i = 0; i < letters.size(); ++i)
            for (std::size_t j = i + 1; j < letters.size(); ++j)
                if (letters[i] == letters[j]) throw Error("alphabet '" + name + "': duplicate letter");
        for (std::size_t i = 0; i < steps.size(); ++i)
            for (std::size_t j = i + 1; j < steps.size(); ++j)
                if (steps[i] == steps[j]) throw Error("alphabet '" + name + "': duplicate step");
        for (const auto& p : forbidden) {
            if (p.size() != 2) throw Error("alphabet '" + name + "': forbidden pattern must be two letters");
            if (letters.find(p[0]) == std::string::npos || letters.find(p[1]) == std::string::npos)
                throw Error("alphabet '" + name + "': forbidden pattern uses unknown letter");
        }
        auto a = std::shared_ptr<StepAlphabet>(new StepAlphabet());
        a->set(std::move(name), std::move(steps), std::move(letters), std::move(forbidden));
        return a;
    }
};

std::shared_ptr<const StepAlphabet> StepAlphabet::custom(std::string name, std::vector<Step> steps,
                                                         std::string letters,
                                                         std::vector<std::string> forbidden_patterns) {
    return AlphabetBuilder::build(std::move(name), std::move(steps), std::move(letters),
                                  std::move(forbidden_patterns));
}

std::vector<std::string> StepAlphabet::family_names() {
    return {"straight", "small", "rY", "kreweras", "tandem", "schnyder", "quartic", "lukasiewicz", "kmsw"};
}

std::shared_ptr<const StepAlphabet> StepAlphabet::family(const std::string& name, int reach_bound) {
    if (name == "straight")
        return AlphabetBuilder::build(name, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {}, {});
    if (name == "small")
        return AlphabetBuilder::build(
            name, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, {}, {});
    if (name == "rY")
        return AlphabetBuilder::build(name, {{0, 1}, {-1, -1}, {1, -1}}, {}, {});
    if (name == "kreweras")
        return AlphabetBuilder::build(name, {{1, 0}, {0, 1}, {-1, -1}}, "abc", {});
    if (name == "tandem")
        return AlphabetBuilder::build(name, {{0, 1}, {1, -1}, {-1, 0}}, "abc", {});
    if (name == "schnyder")
        return AlphabetBuilder::build(name, {{1, 0}, {-1, 1}, {0, -1}}, "abc", {"bc"});
    if (name == "quartic")
        return AlphabetBuilder::build(name, {{0, 2}, {-1, -1}, {1, -1}}, {}, {});
    if (name == "lukasiewicz") {
        if (reach_bound <= 0)
            throw Error("family 'lukasiewicz' is unbounded: a reach bound on |dx|+|dy| is required");
        std::vector<Step> steps{{-1, -1}, {1, -1}};
        for (int k = 0; k <= reach_bound; ++k) steps.push_back({0, k});
        return AlphabetBuilder::build(name, std::move(steps), {}, {});
    }
    if (name == "kmsw") {
        if (reach_bound <= 0)
            throw Error("family 'kmsw' is unbounded: a reach bound on |dx|+|dy| is required");
        std::vector<Step> steps{{1, -1}};
        for (int r = 1; r <= reach_bound; ++r)
            for (int i = r; i >= 0; --i) {
                int j = r - i;
                steps.push_back({-i, j});
            }
        return AlphabetBuilder::build(name, std::move(steps), {}, {});
    }
    throw Error("unknown step family '" + name + "'");
}

void StepAlphabet::set(std::string name, std::vector<Step> steps, std::string letters,
                       std::vector<std::string> forbidden) {
    name_ = std::move(name);
    steps_ = std::move(steps);
    letters_ = std::move(letters);
    forbidden_ = std::move(forbidden);
    std::sort(forbidden_.begin(), forbidden_.end());
}

std::optional<int> StepAlphabet::index_of(const Step& s) const {
    for (std::size_t i = 0; i < steps_.size(); ++i)
        if (steps_[i] == s) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> StepAlphabet::index_of_letter(char c) const {
    auto pos = letters_.find(c);
    if (pos == std::string::npos) return std::nullopt;
    return static_cast<int>(pos);
}

bool StepAlphabet::pair_allowed(int prev_index, int next_index) const {
    if (forbidden_.empty() || letters_.empty()) return true;
    std::string p{letters_[static_cast<std::size_t>(prev_index)],
                  letters_[static_cast<std::size_t>(next_index)]};
    return !std::binary_search(forbidden_.begin(), forbidden_.end(), p);
}

bool StepAlphabet::admits_zero_step() const { return index_of({0, 0}).has_value(); }

std::shared_ptr<const StepAlphabet> StepAlphabet::reflected() const {
    if (auto cached = reflected_cache_.lock()) return cached;
    std::vector<Step> steps;
    steps.reserve(steps_.size());
    for (const Step& s : steps_) steps.push_back({s.dy, s.dx});
    std::string nm = name_;
    const std::string suffix = "_reflected";
    if (nm.size() > suffix.size() && nm.compare(nm.size() - suffix.size(), suffix.size(), suffix) == 0)
        nm.resize(nm.size() - suffix.size());
    else
        nm += suffix;
    auto r = AlphabetBuilder::build(std::move(nm), std::move(steps), letters_, forbidden_);
    r->reflected_cache_ = shared_from_this();
    reflected_cache_ = r;
    return r;
}

Point Walk::end() const {
    Point p = start;
    for (const Step& s : steps) p = p + s;
    return p;
}

std::vector<Point> Walk::positions() const {
    std::vector<Point> ps;
    ps.reserve(steps.size() + 1);
    Point p = start;
    ps.push_back(p);
    for (const Step& s : steps) {
        p = p + s;
        ps.push_back(p);
    }
    return ps;
}

std::string Walk::letter_word() const {
    if (!alphabet || !alphabet->has_letters()) throw Error("walk alphabet has no letters");
    std::string w;
    w.reserve(steps.size());
    for (const Step& s : steps) {
        auto idx = alphabet->index_of(s);
        if (!idx) throw Error("walk step outside its alphabet");
        w.push_back(alphabet->letter_at(*idx));
    }
    return w;
}

bool is_confined(const Walk& w) {
    Point p = w.start;
    if (p.x < 0 || p.y < 0) return false;
    for (const Step& s : w.steps) {
        p = p + s;
        if (p.x < 0 || p.y < 0) return false;
    }
    return true;
}

namespace {

int max_reach(const StepAlphabet& a) {
    int m = 0;
    for (const Step& s : a.steps()) m = std::max(m, s.reach());
    return m;
}

void enumerate_rec(const AlphabetRef& alphabet, int remaining, Point pos, Point end, int last_index,
                   int reach, std::vector<Step>& prefix, std::vector<Walk>& out) {
    if (remaining == 0) {
        if (pos == end) out.push_back(Walk{alphabet, {}, prefix});
        return;
    }
    long long dist = std::abs(pos.x - end.x) + std::abs(pos.y - end.y);
    if (dist > static_cast<long long>(remaining) * reach) return;
    const auto steps = alphabet->steps();
    for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
        if (last_index >= 0 && !alphabet->pair_allowed(last_index, i)) continue;
        Point np = pos + steps[i];
        if (np.x < 0 || np.y < 0) continue;
        prefix.push_back(steps[i]);
        enumerate_rec(alphabet, remaining - 1, np, end, i, reach, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Walk> enumerate_walks(const AlphabetRef& alphabet, int length, Point start, Point end) {
    if (!alphabet) throw Error("enumerate_walks: null alphabet");
    if (length < 0) throw Error("enumerate_walks: negative length");
    std::vector<Walk> out;
    if (start.x < 0 || start.y < 0) return out;
    std::vector<Step> prefix;
    prefix.reserve(static_cast<std::size_t>(length));
    enumerate_rec(alphabet, length, start, end, -1, max_reach(*alphabet), prefix, out);
    for (Walk& w : out) w.start = start;
    return out;
}

std::vector<Walk> enumerate_walks_parallel(const AlphabetRef& alphabet, int length, Point start,
                                           Point end) {
    if (!alphabet) throw Error("enumerate_walks: null alphabet");
    if (length <= 1) return enumerate_walks(alphabet, length, start, end);
    const auto steps = alphabet->steps();
    int reach = max_reach(*alphabet);
    std::vector<std::future<std::vector<Walk>>> parts;
    parts.reserve(steps.size());
    for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
        parts.push_back(std::async(std::launch::async, [=, &steps]() {
            std::vector<Walk> out;
            Point np = start + steps[static_cast<std::size_t>(i)];
            if (np.x < 0 || np.y < 0) return out;
            std::vector<Step> prefix{steps[static_cast<std::size_t>(i)]};
            enumerate_rec(alphabet, length - 1, np, end, i, reach, prefix, out);
            return out;
        }));
    }
    std::vector<Walk> out;
    for (auto& f : parts)
        for (Walk& w : f.get()) {
            w.start = start;
            out.push_back(std::move(w));
        }
    return out;
}

BigInt count_walks(const AlphabetRef& alphabet, int length, Point start, Point end) {
    if (!alphabet) throw Error("count_walks: null alphabet");
    if (length < 0) throw Error("count_walks: negative length");
    if (start.x < 0 || start.y < 0) return 0;
    const auto steps = alphabet->steps();
    const bool track_last = !alphabet->forbidden_patterns().empty();
    // state: position (+ last step index when patterns are restricted)
    using Key = std::tuple<long long, long long, int>;
    std::map<Key, BigInt> cur;
    cur[{start.x, start.y, -1}] = 1;
    for (int t = 0; t < length; ++t) {
        std::map<Key, BigInt> next;
        for (const auto& [key, cnt] : cur) {
            auto [x, y, last] = key;
            for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
                if (last >= 0 && !alphabet->pair_allowed(last, i)) continue;
                long long nx = x + steps[static_cast<std::size_t>(i)].dx;
                long long ny = y + steps[static_cast<std::size_t>(i)].dy;
                if (nx < 0 || ny < 0) continue;
                next[{nx, ny, track_last ? i : -1}] += cnt;
            }
        }
        cur = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [key, cnt] : cur) {
        auto [x, y, last] = key;
        (void)last;
        if (x == end.x && y == end.y) total += cnt;
    }
    return total;
}

Walk reflect_diagonal(const Walk& w) {
    Walk r;
    r.alphabet = w.alphabet ? w.alphabet->reflected() : nullptr;
    r.start = {w.start.y, w.start.x};
    r.steps.reserve(w.steps.size());
    for (const Step& s : w.steps) r.steps.push_back({s.dy, s.dx});
    return r;
}

std::vector<Step> expand_step(const Step& s) {
    std::vector<Step> out;
    int sx = s.dx > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(s.dx); ++i) out.push_back({sx, 0});
    int sy = s.dy > 0 ? 1 : -1;
    for (int j = 0; j < std::abs(s.dy); ++j) out.push_back({0, sy});
    return out;
}

namespace {

void skip_spaces(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long long parse_int_at(const std::string& s, std::size_t& i) {
    std::size_t begin = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    long long value = 0;
    auto res = std::from_chars(s.data() + begin, s.data() + i, value);
    if (res.ec != std::errc() || begin == i)
        throw Error("walk parse error at column " + std::to_string(begin + 1) + ": expected integer");
    return value;
}

Point parse_point_at(const std::string& s, std::size_t& i) {
    skip_spaces(s, i);
    if (i >= s.size() || s[i] != '(')
        throw Error("walk parse error at column " + std::to_string(i + 1) + ": expected '('");
    ++i;
    long long x = parse_int_at(s, i);
    skip_spaces(s, i);
    if (i >= s.size() || s[i] != ',')
        throw Error("walk parse error at column " + std::to_string(i + 1) + ": expected ','");
    ++i;
    long long y = parse_int_at(s, i);
    skip_spaces(s, i);
    if (i >= s.size() || s[i] != ')')
        throw Error("walk parse error at column " + std::to_string(i + 1) + ": expected ')'");
    ++i;
    return {x, y};
}

} // namespace

Walk parse_walk_text(const std::string& line, const AlphabetRef& alphabet) {
    if (!alphabet) throw Error("parse_walk_text: null alphabet");
    std::string body = line;
    Point start{0, 0};
    if (auto at = line.find('@'); at != std::string::npos) {
        body = line.substr(0, at);
        std::string rest = line.substr(at + 1);
        std::size_t i = 0;
        start = parse_point_at(rest, i);
        skip_spaces(rest, i);
        if (i != rest.size()) throw Error("walk parse error: trailing characters after start point");
    }
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
    std::size_t i = 0;
    skip_spaces(body, i);
    Walk w;
    w.alphabet = alphabet;
    w.start = start;
    if (i == body.size()) return w; // empty walk
    if (body[i] == '(') {
        while (i < body.size()) {
            std::size_t col = i + 1;
            Point p = parse_point_at(body, i);
            Step s{static_cast<int>(p.x), static_cast<int>(p.y)};
            if (!alphabet->index_of(s))
                throw Error("walk parse error at column " + std::to_string(col) + ": step (" +
                            std::to_string(s.dx) + "," + std::to_string(s.dy) +
                            ") not in alphabet '" + alphabet->name() + "'");
            w.steps.push_back(s);
            skip_spaces(body, i);
            if (i == body.size()) break;
            if (body[i] != ';')
                throw Error("walk parse error at column " + std::to_string(i + 1) + ": expected ';'");
            ++i;
            skip_spaces(body, i);
        }
        return w;
    }
    if (!alphabet->has_letters())
        throw Error("alphabet '" + alphabet->name() + "' has no letters; use token form \"(dx,dy);...\"");
    for (; i < body.size(); ++i) {
        char c = body[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        auto idx = alphabet->index_of_letter(c);
        if (!idx)
            throw Error("walk parse error at column " + std::to_string(i + 1) + ": unknown letter '" +
                        std::string(1, c) + "' for alphabet '" + alphabet->name() + "'");
        w.steps.push_back(alphabet->step_at(*idx));
    }
    return w;
}

std::string format_walk_text(const Walk& w) {
    std::ostringstream os;
    if (w.alphabet && w.alphabet->has_letters()) {
        bool ok = true;
        for (const Step& s : w.steps)
            if (!w.alphabet->index_of(s)) ok = false;
        if (ok) {
            os << w.letter_word();
        } else {
            ok = false;
        }
        if (ok) {
            if (w.start != Point{0, 0}) os << " @ (" << w.start.x << "," << w.start.y << ")";
            return os.str();
        }
    }
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        if (i) os << ";";
        os << "(" << w.steps[i].dx << "," << w.steps[i].dy << ")";
    }
    if (w.start != Point{0, 0}) os << " @ (" << w.start.x << "," << w.start.y << ")";
    return os.str();
}

} // namespace treemate
