#include "pc/coloring_odometer.hpp"

#include <algorithm>

#include "pc/error.hpp"

namespace pc {

ColoringOdometer::ColoringOdometer(int length, int k, bool up_to_renaming, std::span<const Color> frozen_prefix)
    : k_(k), up_to_renaming_(up_to_renaming), frozen_(static_cast<int>(frozen_prefix.size())),
      colors_(static_cast<std::size_t>(length), 1), running_max_(static_cast<std::size_t>(length), 1)
{
    if (k < 1 || frozen_ > length)
        throw Error(ErrorCode::InvalidArgument, "bad odometer shape");
    std::copy(frozen_prefix.begin(), frozen_prefix.end(), colors_.begin());
    Color running = 0;
    for (int i = 0; i < length; ++i) {
        running = std::max(running, colors_[i]);
        running_max_[i] = running;
    }
}

int ColoringOdometer::limit(int i) const
{
    if (!up_to_renaming_)
        return k_;
    return std::min(k_, (i == 0 ? 0 : running_max_[i - 1]) + 1);
}

bool ColoringOdometer::next()
{
    const int length = static_cast<int>(colors_.size());
    for (int i = length - 1; i >= frozen_; --i) {
        if (colors_[i] < limit(i)) {
            ++colors_[i];
            Color running = std::max(i == 0 ? 0 : running_max_[i - 1], colors_[i]);
            running_max_[i] = running;
            for (int j = i + 1; j < length; ++j) {
                colors_[j] = 1;
                running_max_[j] = running;
            }
            return true;
        }
    }
    return false;
}

std::vector<std::vector<Color>> renaming_classes(int length, int k)
{
    std::vector<std::vector<Color>> out;
    if (length == 0) {
        out.emplace_back();
        return out;
    }
    ColoringOdometer odo(length, k, true);
    do {
        out.push_back(odo.current());
    } while (odo.next());
    return out;
}

}  // namespace pc
