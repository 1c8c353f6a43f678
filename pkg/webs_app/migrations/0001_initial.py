# Generated by Django 5.2.8

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='CheckRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('command', models.CharField(max_length=32)),
                ('params', models.JSONField(default=dict, help_text='Arguments the command ran with')),
                ('records', models.JSONField(default=list, help_text='Report records in emission order')),
                ('status', models.CharField(choices=[('pass', 'Passed'), ('fail', 'Failed'), ('error', 'Error')], default='pass', max_length=10)),
                ('passed', models.PositiveIntegerField(default=0)),
                ('failed', models.PositiveIntegerField(default=0)),
                ('elapsed', models.FloatField(default=0.0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created_at'],
            },
        ),
    ]
