# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.db import migrations, models
import django.utils.timezone
import jsonfield.fields
import model_utils.fields


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CoverageRun',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created', model_utils.fields.AutoCreatedField(default=django.utils.timezone.now, editable=False, verbose_name='created')),
                ('modified', model_utils.fields.AutoLastModifiedField(default=django.utils.timezone.now, editable=False, verbose_name='modified')),
                ('command', models.CharField(choices=[('polar', 'Classical polar'), ('reciprocal', 'Reciprocal polar'), ('singular', 'Singular points'), ('components', 'Component map'), ('render', 'Figure'), ('verify', 'Corpus verification')], max_length=20)),
                ('curve_key', models.CharField(db_index=True, max_length=255)),
                ('curve_text', models.TextField(blank=True)),
                ('exit_code', models.PositiveSmallIntegerField(choices=[(0, 'Hypotheses met, every component covered'), (1, 'Input or computation error'), (2, 'Computed, with unmet hypotheses or uncovered components')], default=0)),
                ('report', jsonfield.fields.JSONField(blank=True, default=dict)),
            ],
            options={
                'ordering': ['-created'],
            },
        ),
    ]
