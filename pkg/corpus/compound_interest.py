"""Savings growth and loan amortization arithmetic."""


def compound(principal, annual_rate, years, periods_per_year=12):
    rate = annual_rate / periods_per_year
    count = years * periods_per_year
    return principal * (1 + rate) ** count


def doubling_time(annual_rate):
    """Rule-of-72 estimate in years."""
    if annual_rate <= 0:
        raise ValueError("rate must be positive")
    return 72 / (annual_rate * 100)


def monthly_payment(principal, annual_rate, years):
    months = years * 12
    if months == 0:
        raise ValueError("term must be at least a month")
    rate = annual_rate / 12
    if rate == 0:
        return principal / months
    factor = (1 + rate) ** months
    return principal * rate * factor / (factor - 1)


def amortization_schedule(principal, annual_rate, years):
    payment = monthly_payment(principal, annual_rate, years)
    rate = annual_rate / 12
    balance = principal
    rows = []
    month = 0
    while balance > 0.005 and month < years * 12:
        month += 1
        interest = balance * rate
        toward_principal = min(payment - interest, balance)
        balance -= toward_principal
        rows.append({
            "month": month,
            "interest": round(interest, 2),
            "principal": round(toward_principal, 2),
            "balance": round(balance, 2)
        })
    return rows


def total_interest(principal, annual_rate, years):
    schedule = amortization_schedule(principal, annual_rate, years)
    return round(sum(row["interest"] for row in schedule), 2)
