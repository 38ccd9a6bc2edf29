# -*- coding: utf-8 -*-
from django.contrib import admin

from .models import CoverageRun


class AllCoveredListFilter(admin.SimpleListFilter):
    title = "coverage"
    parameter_name = "all_covered"

    def lookups(self, request, model_admin):
        return [
            ["yes", "Every component covered"],
            ["no", "Some component not covered"]
        ]

    def queryset(self, request, queryset):
        if self.value() == "yes":
            return queryset.filter(exit_code=0, command__in=["polar", "reciprocal"])
        if self.value() == "no":
            return queryset.filter(command__in=["polar", "reciprocal"]).exclude(exit_code=0)


admin.site.register(
    CoverageRun,
    readonly_fields=('created', 'modified'),
    list_display=[
        "command",
        "curve_key",
        "exit_code",
        "created"
    ],
    search_fields=[
        "curve_key",
        "curve_text"
    ],
    list_filter=[
        "command",
        "exit_code",
        AllCoveredListFilter,
        "created"
    ],
)
