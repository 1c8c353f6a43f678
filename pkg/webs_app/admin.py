# webs_app/admin.py
from django.contrib import admin
from .models import CheckRun

@admin.register(CheckRun)
class CheckRunAdmin(admin.ModelAdmin):
    list_display = ('id', 'command', 'status', 'passed', 'failed', 'elapsed', 'created_at')
    readonly_fields = ('created_at', 'records')
    list_filter = ('status', 'command', 'created_at')
    search_fields = ('command',)
