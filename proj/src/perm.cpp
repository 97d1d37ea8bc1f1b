#include "minfact/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minfact {

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
    const int n = static_cast<int>(img_.size());
    std::vector<bool> seen(n, false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("image table is not a bijection on {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

int Permutation::support_size() const {
    int s = 0;
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i + 1) ++s;
    return s;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> img(f.size());
    for (int i = 0; i < f.size(); ++i) img[i] = f(g(i + 1));
    return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& g, const Permutation& p) {
    if (g.size() != p.size())
        throw std::invalid_argument("conjugating permutations of different sizes");
    std::vector<int> img(g.size());
    for (int i = 0; i < g.size(); ++i) img[g(i + 1) - 1] = g(p(i + 1));
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> cys;
    for (int start = 1; start <= n; ++start) {
        if (seen[start - 1]) continue;
        std::vector<int> cy;
        for (int x = start; !seen[x - 1]; x = p(x)) {
            seen[x - 1] = true;
            cy.push_back(x);
        }
        cys.push_back(std::move(cy));
    }
    return cys;  // starts ascend by construction, each cycle starts at its min
}

Permutation from_cycles(const std::vector<std::vector<int>>& cys) {
    int n = 0;
    for (const auto& cy : cys) n += static_cast<int>(cy.size());
    std::vector<int> img(n, 0);
    for (const auto& cy : cys) {
        if (cy.empty()) throw std::invalid_argument("empty cycle");
        for (size_t i = 0; i < cy.size(); ++i) {
            const int x = cy[i];
            const int y = cy[(i + 1) % cy.size()];
            if (x < 1 || x > n) throw std::invalid_argument("cycle point out of range");
            if (img[x - 1] != 0) throw std::invalid_argument("cycles are not disjoint");
            img[x - 1] = y;
        }
    }
    return Permutation(std::move(img));  // ctor rejects any remaining gaps
}

std::vector<int> cycle_type(const Permutation& p) {
    std::vector<int> lens;
    for (const auto& cy : cycles(p)) lens.push_back(static_cast<int>(cy.size()));
    std::sort(lens.begin(), lens.end());
    return lens;
}

int defect(const Permutation& p) {
    return p.size() - static_cast<int>(cycles(p).size());
}

Permutation canonical_sigma(const RamificationType& t) {
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int len : t.p) {
        std::vector<int> block(len);
        std::iota(block.begin(), block.end(), next);
        next += len;
        blocks.push_back(std::move(block));
    }
    std::vector<int> last(t.n - next + 1);
    std::iota(last.begin(), last.end(), next);
    blocks.push_back(std::move(last));
    return from_cycles(blocks);
}

std::vector<Permutation> centralizer_elements(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        bool commutes = true;
        for (int x = 1; x <= n && commutes; ++x)
            commutes = img[sigma(x) - 1] == sigma(img[x - 1]);
        if (commutes) out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::string to_cycle_string(const Permutation& p) {
    std::ostringstream os;
    for (const auto& cy : cycles(p)) {
        os << '(';
        for (size_t i = 0; i < cy.size(); ++i) os << (i ? " " : "") << cy[i];
        os << ')';
    }
    return os.str();
}

Permutation parse_cycle_string(const std::string& text) {
    std::vector<std::vector<int>> cys;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("expected '(' at position " + std::to_string(i));
        ++i;
        std::vector<int> cy;
        while (true) {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw std::invalid_argument("expected a point in cycle");
            cy.push_back(std::stoi(text.substr(start, i - start)));
            if (i < text.size() && text[i] == ' ') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw std::invalid_argument("expected ' ' or ')' at position " + std::to_string(i));
        }
        cys.push_back(std::move(cy));
    }
    if (cys.empty()) throw std::invalid_argument("empty cycle string");
    Permutation p = from_cycles(cys);
    if (to_cycle_string(p) != text)
        throw std::invalid_argument("cycle string is not in canonical form: " + text);
    return p;
}

}  // namespace minfact
