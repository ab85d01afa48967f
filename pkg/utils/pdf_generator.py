from reportlab.lib.pagesizes import letter
from reportlab.lib.styles import getSampleStyleSheet, ParagraphStyle
from reportlab.platypus import SimpleDocTemplate, Paragraph, Spacer, Table, TableStyle
from reportlab.lib import colors
import os

from config import config


class PDFGenerator:
    def __init__(self):
        self.styles = getSampleStyleSheet()
        self.title_style = ParagraphStyle(
            'CustomTitle',
            parent=self.styles['Heading1'],
            fontSize=18,
            spaceAfter=30,
        )
        self.heading_style = ParagraphStyle(
            'CustomHeading',
            parent=self.styles['Heading2'],
            fontSize=14,
            spaceAfter=20,
        )
        self.normal_style = self.styles['Normal']

    def _table(self, rows):
        headers = list(rows[0].keys())
        table_data = [headers]
        for row in rows:
            table_data.append([str(row.get(h, '')) for h in headers])

        table = Table(table_data)
        table.setStyle(TableStyle([
            ('BACKGROUND', (0, 0), (-1, 0), colors.grey),
            ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
            ('ALIGN', (0, 0), (-1, -1), 'CENTER'),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('BOTTOMPADDING', (0, 0), (-1, 0), 12),
            ('BACKGROUND', (0, 1), (-1, -1), colors.beige),
            ('GRID', (0, 0), (-1, -1), 1, colors.black)
        ]))
        return table

    def generate_verdict_report(self, verdicts, output_path=None, title=None):
        """
        Render enumeration verdicts as a PDF table

        Args:
            verdicts: VerdictSummary objects
            output_path: Target file; defaults to the configured reports directory
            title: Optional report title
        """
        verdicts = list(verdicts)
        if output_path is None:
            reports_dir = config.get('output', 'reports_dir')
            os.makedirs(reports_dir, exist_ok=True)
            name = verdicts[0].host.replace('{', '').replace('}', '').replace(',', '_') if verdicts else 'empty'
            output_path = os.path.join(reports_dir, f'verdict_{name}.pdf')

        doc = SimpleDocTemplate(str(output_path), pagesize=letter)
        story = []

        story.append(Paragraph(title or "Monochromatic Structure Verdicts", self.title_style))
        story.append(Spacer(1, 12))

        if verdicts:
            rows = [{
                'host': v.host,
                'target': v.target,
                'range': f'[{v.start}, {v.end})',
                'symmetry': v.symmetry,
                'colorings': v.colorings,
                'failures': v.failures,
                'verdict': 'holds' if v.holds else 'fails',
            } for v in verdicts]
            story.append(self._table(rows))
            story.append(Spacer(1, 12))

            for v in verdicts:
                if v.counterexample is not None:
                    story.append(Paragraph(f"Counterexample for {v.host} / {v.target}", self.heading_style))
                    story.append(Paragraph(
                        f"Index {v.counterexample_index}, bits {v.counterexample.to_bitstring()}", self.normal_style))
        else:
            story.append(Paragraph("No verdicts.", self.normal_style))

        doc.build(story)
        return str(output_path)
