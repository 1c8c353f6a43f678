# webs_app/models.py
from django.db import models


class CheckRun(models.Model):
    """A saved report: one command invocation and the records it printed."""
    STATUS_CHOICES = [('pass', 'Passed'), ('fail', 'Failed'), ('error', 'Error')]
    command = models.CharField(max_length=32)
    params = models.JSONField(default=dict, help_text="Arguments the command ran with")
    records = models.JSONField(default=list, help_text="Report records in emission order")
    status = models.CharField(max_length=10, choices=STATUS_CHOICES, default='pass')
    passed = models.PositiveIntegerField(default=0)
    failed = models.PositiveIntegerField(default=0)
    elapsed = models.FloatField(default=0.0)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at']

    def __str__(self):
        return f"{self.command} #{self.id} ({self.status}, {self.passed}/{self.passed + self.failed})"

    @classmethod
    def record(cls, command, params, records, elapsed=0.0, error=None):
        passed = sum(1 for r in records if r.get('pass', True))
        failed = len(records) - passed
        status = 'error' if error else ('fail' if failed else 'pass')
        return cls.objects.create(command=command, params=params, records=list(records), status=status,
                                  passed=passed, failed=failed, elapsed=elapsed)
