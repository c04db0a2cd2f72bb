"""Weekly temperature profiles with ternary-heavy summaries."""

DAYS = "mon", "tue", "wed", "thu", "fri", "sat", "sun"


def label(value):
    return "freezing" if value < 0 else "cold" if value < 10 else "mild" if value < 22 else "hot"


def weekly_summary(readings):
    if len(readings) != 7:
        raise ValueError("expected seven readings")
    out = {}
    for day, value in zip(DAYS, readings):
        out[day] = {
            "value": value,
            "label": label(value),
            "swim": True if value >= 24 else False
        }
    return out


def weekend_warmer(readings):
    weekday_avg = sum(readings[:5]) / 5
    weekend_avg = sum(readings[5:]) / 2
    return weekend_avg > weekday_avg


def anomaly_days(readings, history_mean, tolerance=8):
    flagged = []
    for day, value in zip(DAYS, readings):
        delta = value - history_mean
        direction = "above" if delta > 0 else "below"
        if abs(delta) > tolerance:
            flagged.append(f"{day}: {abs(delta):.1f} {direction} normal")
    return flagged


def comfort_score(readings):
    score = 0
    for value in readings:
        score += 2 if 18 <= value <= 24 else 1 if 12 <= value < 18 or 24 < value <= 28 else 0
    return score


def trend(readings):
    rising = sum(1 for a, b in zip(readings, readings[1:]) if b > a)
    falling = sum(1 for a, b in zip(readings, readings[1:]) if b < a)
    return "warming" if rising > falling else "cooling" if falling > rising else "steady"
