"""API quota accounting across tenants and endpoints."""

DEFAULT_LIMITS = {"search": 1000, "write": 200, "admin": 50}


class QuotaExceeded(Exception):
    def __init__(self, tenant, endpoint):
        super().__init__(f"{tenant} exhausted {endpoint}")
        self.tenant = tenant
        self.endpoint = endpoint


class Ledger:
    def __init__(self, limits=None):
        self.limits = dict(DEFAULT_LIMITS)
        if limits:
            self.limits.update(limits)
        self.usage = {}

    def charge(self, tenant, endpoint, amount=1):
        limit = self.limits.get(endpoint)
        if limit is None:
            raise KeyError(f"unknown endpoint {endpoint!r}")
        key = tenant, endpoint
        used = self.usage.get(key, 0)
        if used + amount > limit:
            raise QuotaExceeded(tenant, endpoint)
        self.usage[key] = used + amount
        return limit - self.usage[key]

    def remaining(self, tenant, endpoint):
        return self.limits[endpoint] - self.usage.get((tenant, endpoint), 0)

    def heavy_tenants(self, endpoint, share=0.8):
        limit = self.limits[endpoint]
        out = []
        for (tenant, ep), used in self.usage.items():
            if ep == endpoint and used >= limit * share:
                out.append(tenant)
        return sorted(out)

    def reset(self, tenant=None):
        if tenant is None:
            self.usage.clear()
            return
        for key in [k for k in self.usage if k[0] == tenant]:
            del self.usage[key]


def batched_charges(ledger, tenant, requests):
    granted = 0
    for endpoint in requests:
        try:
            ledger.charge(tenant, endpoint)
            granted += 1
        except QuotaExceeded:
            break
    return granted
