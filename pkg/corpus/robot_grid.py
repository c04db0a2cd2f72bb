"""A robot walking a grid with simple command strings."""

HEADINGS = ["N", "E", "S", "W"]
MOVES = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "W": (-1, 0)}


class Robot:
    def __init__(self, x=0, y=0, heading="N"):
        self.x = x
        self.y = y
        self.heading = heading
        self.trail = [(x, y)]

    def turn_left(self):
        index = HEADINGS.index(self.heading)
        self.heading = HEADINGS[(index - 1) % 4]

    def turn_right(self):
        index = HEADINGS.index(self.heading)
        self.heading = HEADINGS[(index + 1) % 4]

    def forward(self, steps=1):
        dx, dy = MOVES[self.heading]
        for _ in range(steps):
            self.x += dx
            self.y += dy
            self.trail.append((self.x, self.y))

    def execute(self, program):
        i = 0
        while i < len(program):
            ch = program[i]
            count = 0
            j = i + 1
            while j < len(program) and program[j].isdigit():
                count = count * 10 + int(program[j])
                j += 1
            repeat = count if count else 1
            if ch == "L":
                for _ in range(repeat):
                    self.turn_left()
            elif ch == "R":
                for _ in range(repeat):
                    self.turn_right()
            elif ch == "F":
                self.forward(repeat)
            else:
                raise ValueError(f"unknown command {ch!r}")
            i = j
        return self.x, self.y

    def visited_twice(self):
        seen = set()
        repeats = []
        for point in self.trail:
            if point in seen:
                repeats.append(point)
            seen.add(point)
        return repeats


def final_distance(program):
    robot = Robot()
    robot.execute(program)
    return abs(robot.x) + abs(robot.y)
