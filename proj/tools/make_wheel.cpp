// Regenerates the bundled wheel test asset: a 64x64 spoked pattern and its
// spoke mask, written as assets/wheel.pgm and assets/wheel_mask.pgm.
#include <cstdio>
#include <string>

#include "plcwt/io.hpp"
#include "wheel_pattern.hpp"

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "assets";
    const wheelgen::WheelPattern w = wheelgen::make_wheel();
    plcwt::save_image(w.image, dir + "/wheel.pgm");
    plcwt::save_mask(w.mask, w.image.spec, dir + "/wheel_mask.pgm");
    std::printf("wrote %s/wheel.pgm and %s/wheel_mask.pgm\n", dir.c_str(), dir.c_str());
    return 0;
}
