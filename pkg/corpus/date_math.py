"""Calendar arithmetic without the datetime module."""

DAYS_IN_MONTH = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31]
MONTH_NAMES = [
    "January", "February", "March", "April", "May", "June", "July",
    "August", "September", "October", "November", "December"
]


def is_leap_year(year):
    if year % 400 == 0:
        return True
    if year % 100 == 0:
        return False
    return year % 4 == 0


def days_in_month(year, month):
    if month < 1 or month > 12:
        raise ValueError("month out of range")
    if month == 2 and is_leap_year(year):
        return 29
    return DAYS_IN_MONTH[month - 1]


def day_of_year(year, month, day):
    total = day
    for m in range(1, month):
        total += days_in_month(year, m)
    return total


def add_days(year, month, day, delta):
    d = day + delta
    while d > days_in_month(year, month):
        d -= days_in_month(year, month)
        month += 1
        if month > 12:
            month = 1
            year += 1
    while d < 1:
        month -= 1
        if month < 1:
            month = 12
            year -= 1
        d += days_in_month(year, month)
    return year, month, d


def weekday(year, month, day):
    """Zeller's congruence; 0 is Saturday."""
    if month < 3:
        month += 12
        year -= 1
    k = year % 100
    j = year // 100
    value = day + 13 * (month + 1) // 5 + k + k // 4 + j // 4 + 5 * j
    return value % 7


def format_date(year, month, day):
    return f"{MONTH_NAMES[month - 1]} {day}, {year}"
