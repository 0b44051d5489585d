#!/usr/bin/env python3
"""Generates the bundled ASCII world fixtures (worlds/*.world)."""
import os

HERE = os.path.dirname(os.path.abspath(__file__))
WORLDS = os.path.join(HERE, "..", "worlds")


class Canvas:
    def __init__(self, width, height, resolution=0.1):
        self.w = width
        self.h = height
        self.res = resolution
        # grid[row][col], row 0 = top of the file (max y)
        self.grid = [["." for _ in range(width)] for _ in range(height)]
        self.rect(0, 0, width - 1, 1, "#")
        self.rect(0, height - 2, width - 1, height - 1, "#")
        self.rect(0, 0, 1, height - 1, "#")
        self.rect(width - 2, 0, width - 1, height - 1, "#")

    def rect(self, x0, y0, x1, y1, ch="#"):
        """Fills cells x0..x1, y0..y1 inclusive; y counts from the bottom."""
        for y in range(y0, y1 + 1):
            for x in range(x0, x1 + 1):
                self.grid[self.h - 1 - y][x] = ch

    def save(self, name):
        os.makedirs(WORLDS, exist_ok=True)
        path = os.path.join(WORLDS, name)
        with open(path, "w") as f:
            f.write(f"resolution {self.res}\n")
            for row in self.grid:
                f.write("".join(row) + "\n")
        print(f"wrote {path} ({self.w}x{self.h})")


def demo():
    # 6m x 8m, two rooms joined by a wide doorway, one pillar.
    c = Canvas(60, 80)
    c.rect(2, 39, 57, 40, "#")   # dividing wall
    c.rect(22, 39, 37, 40, ".")  # 1.6 m doorway
    c.rect(42, 14, 45, 17, "#")  # pillar in the lower room
    c.save("demo.world")


def office():
    # 12m x 16m office: central corridor, four rooms per side.
    c = Canvas(120, 160)
    # Corridor walls (cols 50-51 and 68-69), corridor free between.
    c.rect(50, 2, 51, 157, "#")
    c.rect(68, 2, 69, 157, "#")
    # Left rooms: horizontal walls at rows 39-40, 79-80, 119-120.
    c.rect(2, 39, 51, 40, "#")
    c.rect(2, 79, 51, 80, "#")
    c.rect(2, 119, 51, 120, "#")
    # Right rooms: staggered walls at rows 52-53 and 105-106.
    c.rect(68, 52, 117, 53, "#")
    c.rect(68, 105, 117, 106, "#")
    # Doorways from the corridor into each left room (1.4 m).
    c.rect(50, 12, 51, 25, ".")
    c.rect(50, 52, 51, 65, ".")
    c.rect(50, 92, 51, 105, ".")
    c.rect(50, 132, 51, 145, ".")
    # Doorways into each right room (1.4 m).
    c.rect(68, 20, 69, 33, ".")
    c.rect(68, 72, 69, 85, ".")
    c.rect(68, 126, 69, 139, ".")
    # Corridor openings at both ends so the corridor loops are avoidable.
    # Furniture pillars, kept >= 1.2 m from walls.
    c.rect(20, 16, 23, 19, "#")
    c.rect(30, 56, 33, 59, "#")
    c.rect(14, 96, 17, 99, "#")
    c.rect(30, 136, 33, 139, "#")
    c.rect(90, 20, 93, 23, "#")
    c.rect(100, 76, 103, 79, "#")
    c.rect(86, 128, 89, 131, "#")
    c.save("office.world")


def embed_demo():
    """Regenerates src/demo_world.cpp from worlds/demo.world."""
    text = open(os.path.join(WORLDS, "demo.world")).read()
    path = os.path.join(HERE, "..", "src", "demo_world.cpp")
    with open(path, "w") as f:
        f.write('#include "explore/config.hpp"\n\n')
        f.write("// Generated by tools/make_worlds.py from worlds/demo.world.\n")
        f.write("namespace explore {\n\n")
        f.write("const char* demo_world_text() {\n")
        f.write('  return R"world(' + text + ')world";\n')
        f.write("}\n\n}  // namespace explore\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    demo()
    office()
    embed_demo()
