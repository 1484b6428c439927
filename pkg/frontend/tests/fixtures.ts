/** Three fixture pages exercising the headline precedence chain. */

export const PAGE_WITH_EVERYTHING = `<!doctype html>
<html>
  <head>
    <title>Title Element Headline</title>
    <meta property="og:title" content="Open Graph Headline">
  </head>
  <body>
    <h1>First Heading Headline</h1>
    <p>Body copy.</p>
  </body>
</html>`;

export const PAGE_WITH_HEADING_AND_TITLE = `<!doctype html>
<html>
  <head><title>Title Element Headline</title></head>
  <body>
    <h1>
      Padded Heading Headline
    </h1>
  </body>
</html>`;

export const PAGE_WITH_TITLE_ONLY = `<!doctype html>
<html>
  <head><title>Bare Title Headline</title></head>
  <body><p>No headings here.</p></body>
</html>`;

export const PAGE_WITH_NOTHING = `<!doctype html>
<html>
  <head><title>   </title></head>
  <body><p>Untitled page.</p></body>
</html>`;

export function loadPage(html: string): Document {
  const doc = document.implementation.createHTMLDocument();
  doc.documentElement.innerHTML = html.replace(/^<!doctype html>\s*/i, "");
  return doc;
}
